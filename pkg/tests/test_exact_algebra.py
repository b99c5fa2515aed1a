from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artifact.exact_algebra import (
    LogSolutionTriple,
    NoDependence,
    Poly,
    QSeries,
    dumps_series,
    matrix_rank,
    normalize_dependence,
    nullspace,
    poly_gcd,
    rat_to_str,
    ratfun_nullspace,
)

small = st.integers(-9, 9)
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def series(order=8, const=None):
    coeffs = st.lists(rationals, min_size=order + 1, max_size=order + 1)
    if const is None:
        return coeffs.map(lambda c: QSeries(c, order))
    return coeffs.map(lambda c: QSeries([const] + c[1:], order))


def test_rationals_serialize_reduced():
    assert rat_to_str(Fraction(6, -4)) == "-3/2"
    assert rat_to_str(Fraction(8, 4)) == "2"


def test_poly_basics():
    x = Poly([0, 1])
    assert Poly().degree == -1
    assert (x + 1) * (x - 1) == x**2 - 1
    assert Poly([1, 2, 0, 0]).coeffs == (1, 2)
    q, r = (x**3 + 2).divmod(x - 1)
    assert q * (x - 1) + r == x**3 + 2 and r.degree < 1
    assert poly_gcd((x - 1) * (x + 2), (x - 1) * (x + 5)) == x - 1


def test_difference_of_squares_and_identity():
    a = QSeries([1, 1], 4)
    b = QSeries([1, -1], 4)
    assert a * b == QSeries([1, 0, -1], 4)
    assert QSeries([1, 3], 4) * QSeries.const(1, 4) == QSeries([1, 3], 4)


def test_product_takes_min_order():
    assert (QSeries([1, 1], 3) * QSeries([1, 1], 7)).order == 3


def test_inverse_residual():
    psi0 = QSeries([1, 3, 12, 47, 5, -2, 9], 12)
    assert psi0 * psi0.inverse() == QSeries.const(1, 12)


def test_exp_log_examples():
    assert QSeries.const(0, 6).exp() == QSeries.const(1, 6)
    mercator = QSeries([0] + [Fraction((-1) ** (n + 1), n) for n in range(1, 7)], 6)
    assert QSeries([1, 1], 6).log() == mercator
    a = QSeries([1, 5, 7], 10)
    assert a.log().exp() == a


def test_exp_log_reject_bad_constants():
    with pytest.raises(ValueError):
        QSeries([1, 1], 4).exp()
    with pytest.raises(ValueError):
        QSeries([2, 1], 4).log()


def test_reversion_catalan():
    v = QSeries([0, 1, 1], 8).reversion()
    catalan = [1, 1, 2, 5, 14, 42, 132, 429]
    assert [v[n] for n in range(1, 9)] == [(-1) ** (n - 1) * catalan[n - 1] for n in range(1, 9)]
    assert QSeries.q(6).reversion() == QSeries.q(6)


def test_reversion_rejects_zero_linear_term():
    with pytest.raises(ValueError):
        QSeries([0, 0, 1], 5).reversion()


@settings(max_examples=30, deadline=None)
@given(series(), series(), series())
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a


@settings(max_examples=100, deadline=None)
@given(st.lists(small, min_size=7, max_size=7))
def test_reversion_round_trip(tail):
    u = QSeries([0, 1] + tail, 8)
    v = u.reversion()
    assert u.compose(v) == QSeries.q(8)
    assert v.compose(u) == QSeries.q(8)


@settings(max_examples=40, deadline=None)
@given(series(const=0))
def test_exp_log_round_trip(a):
    assert a.exp().log() == a


@settings(max_examples=40, deadline=None)
@given(series(const=1))
def test_log_derivative_identity(a):
    # theta(log a) * a = theta(a)
    assert a.log().theta() * a == a.theta()


def test_series_json_round_trip():
    s = QSeries([1, Fraction(-65, 19), 0, 7], 5)
    assert QSeries.from_json(s.to_json()) == s
    assert dumps_series(s).startswith('["1", "-65/19"')


def test_log_solution_triple_validates_constants():
    z = QSeries.const(0, 3)
    LogSolutionTriple(QSeries.const(1, 3), z, z)
    with pytest.raises(ValueError):
        LogSolutionTriple(QSeries.const(2, 3), z, z)
    with pytest.raises(ValueError):
        LogSolutionTriple(QSeries.const(1, 3), QSeries.const(1, 3), z)


def test_nullspace_trivial_examples():
    # last entry's leading coefficient is made positive
    one, zero = Poly([1]), Poly()
    assert ratfun_nullspace([[one, zero], [zero, one], [one, one]]) == [Poly([-1]), Poly([-1]), Poly([1])]
    q = Poly([0, 1])
    assert ratfun_nullspace([[one, q], [q, q * q]]) == [-q, Poly([1])]


def test_nullspace_accepts_rational_functions():
    q = Poly([0, 1])
    rows = [[(Poly([1]), q + 1)], [(Poly([1]), q - 1)]]
    dep = ratfun_nullspace(rows)
    assert dep == normalize_dependence([-(q + 1), q - 1])


def test_nullspace_no_dependence():
    one, zero = Poly([1]), Poly()
    with pytest.raises(NoDependence):
        ratfun_nullspace([[one, zero], [zero, one]])


@settings(max_examples=25, deadline=None)
@given(
    st.lists(st.lists(st.lists(small, min_size=1, max_size=3), min_size=3, max_size=3), min_size=4, max_size=4),
    st.lists(st.lists(small, min_size=1, max_size=2).filter(any), min_size=4, max_size=4),
)
def test_nullspace_invariant_under_row_scaling(entries, scales):
    rows = [[Poly(c) for c in r] for r in entries]
    try:
        dep = ratfun_nullspace(rows)
    except NoDependence:
        return
    scaled = [[Poly(s) * x for x in r] for r, s in zip(rows, scales)]
    dep2 = ratfun_nullspace(scaled)
    # dependence of the scaled rows is dep_k / s_k up to normalization
    k = len(dep)
    check = [sum((dep2[i] * scaled[i][j] for i in range(k)), Poly()) for j in range(3)]
    assert all(c.is_zero() for c in check)
    assert len(dep2) == k


def test_matrix_rank_and_nullspace():
    assert matrix_rank([[1, 2], [2, 4]]) == 1
    assert matrix_rank([[1, 0], [0, 1]]) == 2
    basis = nullspace([[1, 1, -1]])
    assert len(basis) == 2
    assert all(b[0] + b[1] - b[2] == 0 for b in basis)


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.lists(st.tuples(st.lists(small, min_size=1, max_size=3), st.lists(small, min_size=1, max_size=2).filter(any)), min_size=2, max_size=2), min_size=3, max_size=3)
)
def test_nullspace_dependence_vanishes_on_rational_rows(entries):
    rows = [[(Poly(n), Poly(d)) for n, d in r] for r in entries]
    dep = ratfun_nullspace(rows)
    for j in range(2):
        dens = [rows[i][j][1] for i in range(len(dep))]
        total = Poly()
        for i, c in enumerate(dep):
            other = Poly([1])
            for m, d in enumerate(dens):
                if m != i:
                    other = other * d
            total = total + c * rows[i][j][0] * other
        assert total.is_zero()
