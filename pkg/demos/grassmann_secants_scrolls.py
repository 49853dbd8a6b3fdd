# coding: utf-8

# # Grassmannians of secant planes
#
# G_{h,k}(X) collects the h-planes that lie inside the span of k+1 points of
# X. For surfaces and (h, k) = (1, 2) the expected dimension is 3n + 2 = 8,
# i.e. lines inside secant planes.

# In[1]:

from secgrass import ComputeCfg, from_selector, grass_secant_dim

cfg = ComputeCfg()
names = ["veronese:2,2", "veronese:2,3@P5", "scroll:2,2", "scroll:3,1",
         "scroll:4,0", "cone-rnc4"]


# Scrolls and cones drop by one; the Veronese surface and its projection do
# not, even though the Veronese has a defective secant variety.

# In[2]:

for name in names:
    e = grass_secant_dim(from_selector(name), 1, 2, cfg)
    print(f"{name:18s} G_12 = {e.dim}  (expected {e.expdim})")


# Taking h = 0 recovers the ordinary secant variety.

# In[3]:

from secgrass import secant_dim

X = from_selector("scroll:3,1")
for k in (1, 2, 3):
    print(k, grass_secant_dim(X, 0, k, cfg).dim, secant_dim(X, k, cfg).dim)
