# coding: utf-8

# # Checking the inequalities on the catalog
#
# Each check has a hypothesis and a conclusion computed from the dimension
# estimates. A check fails only when the hypothesis holds and the conclusion
# does not.

# In[1]:

from collections import Counter

from secgrass import ComputeCfg, catalog, check_inequalities

cfg = ComputeCfg()
tally = Counter()
for X in catalog():
    for c in check_inequalities(X, 3, cfg):
        tally[c.rule, c.hypothesis_held, c.failed] += 1

for (rule, held, failed), count in sorted(tally.items()):
    print(f"{rule:22s} hypothesis={held!s:5s} failed={failed!s:5s} x{count}")


# A mislabeled cone is caught: scroll(2, 2) with the cone flag flipped on
# passes, but the cone over the quartic curve with the flag turned off does not.

# In[2]:

from secgrass import from_selector
from secgrass.varieties import with_cone_flag

bad = with_cone_flag(from_selector("cone-rnc4"), False)
print([c.rule for c in check_inequalities(bad, 3, cfg) if c.failed])
