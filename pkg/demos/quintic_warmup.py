"""
Warm-ups: the quintic and the plane
===================================

The same series machinery on two classical cases.
"""

from artifact import quantum_engine as qe

# 2875 lines on the quintic, once from the mirror pipeline
print("pipeline:", qe.quintic_instantons(3))

# and once from Bott's formula on G(2,5) with distinct weights
print("Grassmannian:", qe.quintic_lines_grassmannian())

# rational plane curves through 3d-1 points
print("Kontsevich:", qe.kontsevich_p2(5))

# the degree-two value is the dimension count for conics through five points
print("conics through 5 points:", qe.conics_through_five_points())
