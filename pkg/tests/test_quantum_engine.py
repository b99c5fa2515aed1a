from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artifact import quantum_engine as qe
from artifact.checks import TWO_POINT_VALUES, INSTANTONS_X, expected_matrix
from artifact.exact_algebra import NoDependence, Poly, QSeries, ratfun_nullspace
from artifact.intersection_counts import ring_N
from artifact.localization import bott_integral, default_weights

D = Poly([0, 1])
q = Poly([0, 1])


def test_two_point_examples():
    d = qe.two_point_numbers()
    assert d.numbers[(2, 12)] == 3
    assert d.numbers[(3, 12)] == 0
    assert (d.a1, d.b1, d.c1) == (3, -1, Fraction(-65, 19))
    assert d.numbers == TWO_POINT_VALUES


def test_two_point_codim_sum():
    d = qe.two_point_numbers()
    assert all(qe.codim(a) + qe.codim(b) == 8 for a, b in d.numbers)


def test_two_point_marking_symmetry():
    recs = qe._m02_records()
    w = default_weights()
    swapped = bott_integral(recs, qe.basis_integrand(9, 1) * qe.basis_integrand(8, 2), w)
    assert swapped == qe.two_point(8, 9) == 270


@pytest.mark.parametrize("seed", [1, 2])
def test_two_point_weight_independence(seed):
    a, b = qe.two_point_numbers(), qe.two_point_numbers(default_weights(seed))
    assert a.numbers == b.numbers and (a.a1, a.b1, a.c1) == (b.a1, b.b1, b.c1)


def test_quantum_matrix_matches_expected():
    M = qe.quantum_matrix()
    P = expected_matrix()
    assert all(M[i, j] == P[i][j] for i in range(13) for j in range(13))


def test_quantum_matrix_examples():
    M = qe.quantum_matrix()
    assert M[0, 2] == 3 * q
    assert M[11, 8] == Poly([57])
    col4 = [M[c, 4] for c in range(13)]
    assert col4[7] == Poly([1]) and all(p.is_zero() for c, p in enumerate(col4) if c != 7)


def test_quantum_matrix_homogeneity_and_classical_part():
    M = qe.quantum_matrix()
    deg = ring_N().basis_degrees
    R = ring_N()
    for c in range(13):
        for a in range(13):
            for k, coef in enumerate(M[c, a].coeffs):
                if coef:
                    assert deg[c] == deg[a] + 1 - 3 * k
            classical = (R.basis_class(1) * R.basis_class(a)).coeffs.get(c, 0)
            assert M[c, a][0] == classical


def test_ring_relation_kills_identity():
    assert all(p.is_zero() for p in qe.ring_relation_check())


def test_picard_fuchs_matches_expected():
    pf = qe.picard_fuchs_N()
    assert pf == qe.QD_N_EXPECTED
    assert pf.block(0) == D**7 * Poly([907, -1035, 299]) * (D - 1) ** 3
    assert pf.block(3) == -243 * (D + 1) * Poly([1551, 1357, 299])
    assert (pf.order, pf.q_degree) == (12, 3)


def test_picard_fuchs_minimality():
    rows = qe.cyclic_rows()
    for qd in range(3):
        for order in range(1, 13):
            assert qe.annihilators_bounded(rows, order, qd) == []
    assert qe.annihilators_bounded(rows, 11, 3) == []
    assert qe.annihilators_bounded(rows, 12, 3) == [qe.QD_N_EXPECTED]


def test_least_order_annihilator():
    low = qe.minimal_order_annihilator()
    assert low.order == 10
    with pytest.raises(NoDependence):
        ratfun_nullspace(qe.cyclic_rows()[:10])
    # both operators kill the same log solutions
    sol = qe.log_solutions_N(12)
    for op in (low, qe.QD_N_EXPECTED):
        assert all(s.valuation() is None for r in qe.log_residuals(op, sol) for s in r)


def test_expected_operator_lies_in_the_annihilator():
    rows = qe.cyclic_rows()
    op = qe.QD_N_EXPECTED
    c = [Poly([op.block(a)[k] for a in range(op.q_degree + 1)]) for k in range(13)]
    total = [sum((c[k] * rows[k][i] for k in range(13)), Poly()) for i in range(13)]
    assert all(t.is_zero() for t in total)


ops = st.lists(st.lists(st.integers(-3, 3), min_size=1, max_size=3).map(Poly), min_size=1, max_size=3).map(qe.DiffOp.from_blocks)
series = st.lists(st.integers(-5, 5), min_size=9, max_size=9).map(lambda c: QSeries(c, 8))


@settings(max_examples=40, deadline=None)
@given(ops, ops, series)
def test_composition_matches_sequential_application(A, B, f):
    assert (A @ B).apply(f) == A.apply(B.apply(f))


def test_composition_commutation_rule():
    Dop = qe.DiffOp.from_blocks([D])
    qop = qe.DiffOp.from_blocks([Poly(), Poly([1])])
    assert Dop @ qop == qe.DiffOp.from_blocks([Poly(), D + 1])


def test_apply_log_product_rule():
    # D (t g) = g + t D g
    g = QSeries([1, 2, 3, 4], 3)
    Dop = qe.DiffOp.from_blocks([D])
    out = Dop.apply_log([QSeries.const(0, 3), g])
    assert out == [g, g.theta()]


def test_log_solutions_seeds_and_second_terms():
    sol = qe.solve_log_solutions(qe.QD_N_EXPECTED, qe.SEEDS_N, 12)
    assert (sol.psi0[0], sol.psi0[1]) == (1, 3)
    assert (sol.psi1[1], sol.psi2[1]) == (-1, Fraction(-65, 19))
    # n = 2: P0(2) a2 = -(a1 P1(1) + a0 P2(0)) = -(3 * -6420 - 7668), P0(2) = 4224
    assert sol.psi0[2] == Fraction(51, 8)


def test_log_solutions_annihilated_mod_q13():
    sol = qe.solve_log_solutions(qe.QD_N_EXPECTED, qe.SEEDS_N, 12)
    res = qe.log_residuals(qe.QD_N_EXPECTED, sol)
    assert all(s.valuation() is None for r in res for s in r)


def test_seeds_from_localization():
    assert qe.seeds_from_localization() == qe.SEEDS_N


def test_solver_rejects_bad_leading_block():
    op = qe.DiffOp.from_blocks([D * (D - 2), Poly([1])])
    with pytest.raises(ValueError):
        qe.solve_log_solutions(op, {"a": [1, 0], "b": [0, 0], "c": [0, 0]}, 5)


def test_instantons_n1_to_n10():
    assert qe.instantons_X(10) == INSTANTONS_X


def test_instantons_reject_non_integral_input():
    sol = qe.solve_log_solutions(qe.QD_N_EXPECTED, {"a": [1, 3], "b": [0, -1], "c": [0, Fraction(-65, 19) + Fraction(1, 100)]}, 4)
    with pytest.raises(ArithmeticError):
        qe.instantons_X(4, sol)


def test_mirror_map_normalization_and_round_trip():
    sol = qe.log_solutions_N(12)
    I0 = qe.I0_X(12, sol)
    J1 = QSeries([0] + [qe.R_coefficients(d)[1] * sol.psi0[d] + qe.R_coefficients(d)[0] * sol.psi1[d] for d in range(1, 13)], 12)
    r = J1 / I0
    assert r[0] == 0
    u = QSeries.q(12) * r.exp()
    assert u.compose(u.reversion()) == QSeries.q(12)


def test_R_coefficients():
    assert qe.R_coefficients(1) == [1, 3, 3]
    assert qe.R_coefficients(2) == [8, 36, 66]


def test_expected_QD_X_annihilates_I0():
    sol = qe.log_solutions_N(12)
    assert qe.QD_X_EXPECTED.apply(qe.I0_X(10, sol)).valuation() is None


def test_quintic():
    n = qe.quintic_instantons(3)
    assert n[0] == 2875 == qe.quintic_lines_grassmannian()
    assert n[1:] == [609250, 317206375]


@pytest.mark.parametrize("w", [(0, 1, 3, 7, 15), (2, -5, 11, 4, 9), (1, 2, 3, 4, 5)])
def test_grassmannian_oracle_weight_independent(w):
    assert qe.quintic_lines_grassmannian(w) == 2875


def test_grassmannian_oracle_rejects_repeated_weights():
    with pytest.raises(ValueError):
        qe.quintic_lines_grassmannian((0, 0, 1, 2, 3))


def test_kontsevich():
    K = qe.kontsevich_p2(5)
    assert K[:4] == [1, 1, 12, 620]
    assert K[4] == 87304
    assert qe.conics_through_five_points() == K[1]


def test_five_point_oracle_sees_special_position():
    # four collinear points impose only four conditions
    pts = ((1, 0, 0), (0, 1, 0), (1, 1, 0), (1, 2, 0), (0, 0, 1))
    assert qe.conics_through_five_points(pts) == 2


def test_aspinwall_morrison():
    N = qe.aspinwall_morrison(INSTANTONS_X)
    assert N[0] == 147
    assert N[1] == Fraction(6195, 8)
    for d in (3, 5, 7):
        assert N[d - 1] == INSTANTONS_X[d - 1] + Fraction(147, d**3)
