"""
Lines and conics on the three sections
======================================

Counting curves of degree one and two on X, Y and Z by Bott's formula.
"""

from artifact import conic_counts as cc
from artifact import intersection_counts as ic
from artifact.geometry_data import fixpoints_N
from artifact.localization import default_weights

# N has 13 torus fixpoints, and its Euler number agrees
print("fixpoints of N:", len(fixpoints_N()))
print("c6(TN) =", ic.euler_characteristic_N())

# the top-degree monomials in the Chern classes of E and F
for m, v in ic.monomial_values_N().items():
    print(f"  {ic.monomial_name(m):>10} = {v}")

# lines: one Bott sum per target over the fixpoints of the space of lines
print("lines (X, Y, Z):", ic.line_counts())

# conics of type (1,1) come from a sum over 144 marked fixpoints;
# type (0,2) lives on the space of lines and only Z picks any up
a, b = cc.conic11_counts(), ic.conic02_counts()
print("conics (1,1):", a)
print("conics (0,2):", b)
print("total:", cc.conic_totals())

# the answer does not depend on the choice of one-parameter subgroup
for seed in range(3):
    w = default_weights(seed)
    print(w, cc.conic11_counts(w))
