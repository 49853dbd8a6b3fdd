# coding: utf-8

# # Secant varieties of the Veronese surface
#
# The Veronese surface in P^5 is the classic example of a defective secant
# variety: a count of parameters says its secant lines should fill P^5, but
# they only sweep out a cubic hypersurface.

# In[1]:

from secgrass import ComputeCfg, secant_dim, veronese

cfg = ComputeCfg(seed=0, trials=3)
V = veronese(2, 2)
print(V.name, "n =", V.n, "r =", V.r)


# Dimensions are computed as ranks of tangent spaces at random points, over
# the prime field F_p with p = 2^61 - 1.

# In[2]:

for k in range(3):
    e = secant_dim(V, k, cfg)
    print(f"S_{k}: dim {e.dim}  expected {e.expdim}  defect {e.defect}")


# Compare with the rational normal curves, which are never defective.

# In[3]:

for d in range(2, 9):
    print(d, [secant_dim(veronese(1, d), k, cfg).dim for k in (1, 2, 3)])


# The same numbers can be recomputed over Q as a cross-check.

# In[4]:

e = secant_dim(V, 1, ComputeCfg(cross_check=True))
print(e.dim, e.cross_check_dim, e.cross_check_agrees)
