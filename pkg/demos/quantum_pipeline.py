"""
From two-point numbers to instanton numbers
===========================================

The quantum multiplication by p on A*(N), its Picard-Fuchs operator,
and the instanton numbers of X read off after the mirror map.
"""

from artifact import quantum_engine as qe

# 12 two-point numbers plus the seeds a1, b1, c1 of the log solutions
d = qe.two_point_numbers()
for (a, b), v in sorted(d.numbers.items()):
    print(f"<T{a}, T{b}> = {v}")
print("seeds:", d.a1, d.b1, d.c1)

# the 13 x 13 quantum matrix; entries are polynomials in q
M = qe.quantum_matrix()
for row in M.as_strings():
    print(" ".join(f"{x:>6}" for x in row))

# F' = M F has a cyclic vector; the annihilator of least q-degree has order 12
pf = qe.picard_fuchs_N(M)
print("order", pf.order, "q-degree", pf.q_degree)
for a, p in enumerate(pf.as_strings()):
    print(f"  q^{a}: {p}")

# the least-order annihilator is smaller, but its blocks have higher q-degree
low = qe.minimal_order_annihilator(M)
print("least order:", low.order, "its q-degree:", low.q_degree)

# log solutions mod q^13, then mirror map and instanton extraction
sol = qe.log_solutions_N(12)
n = qe.instantons_X(10, sol)
for k, v in enumerate(n, start=1):
    print(f"n_{k} = {v}")

# multiple-cover corrected numbers N_d
print([str(x) for x in qe.aspinwall_morrison(n[:4])])
