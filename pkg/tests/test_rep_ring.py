from fractions import Fraction
from math import comb, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artifact.geometry_data import fixpoints_N
from artifact.rep_ring import TRIVIAL, V_STD, VirtualRep, character, lam, mono, rep_power_k, rep_sym, rep_wedge2, weights_of

exps = st.integers(-3, 3)
chars = st.tuples(exps, exps, exps)
effective = st.lists(chars, min_size=1, max_size=4).map(VirtualRep)
virtual = st.dictionaries(chars, st.integers(-2, 2), max_size=4).map(VirtualRep)


def test_mul_examples():
    assert lam(0) * lam(0, -1) == VirtualRep.one()
    assert (lam(0) + lam(1)) * lam(2) == mono(1, 0, 1) + mono(0, 1, 1)


def test_weight_triple_product_has_six_terms():
    E = mono(0, 1, 1) + mono(1, 1, 0) + mono(1, 0, 1)
    F = mono(1, 1, 1) * 2
    assert (E * F.dual()).rank == 6
    assert E * F.dual() == (lam(0, -1) + lam(1, -1) + lam(2, -1)) * 2


def test_power_k_examples():
    assert rep_power_k(lam(0, 2), Fraction(1, 2)) == lam(0)
    u = lam(0) + lam(1, 2)
    assert rep_power_k(u, 1) == u
    assert rep_power_k(u, -1) == lam(0, -1) + lam(1, -2)


def test_sym_wedge_examples():
    assert rep_sym(lam(0) + lam(1), 2) == lam(0, 2) + mono(1, 1, 0) + lam(1, 2)
    assert rep_wedge2(V_STD) == mono(1, 1, 0) + mono(1, 0, 1) + mono(0, 1, 1)
    assert rep_sym(lam(0) + lam(2), 4).rank == 5


def test_sym_rejects_virtual():
    with pytest.raises(ValueError):
        (lam(0) - lam(1)).sym(2)


def test_weights_examples():
    assert weights_of(mono(1, -1, 0), (1, 2, 3)) == [(-1, 1)]
    assert weights_of(VirtualRep.one(), (1, 2, 3)) == [(0, 1)]


def test_tangent_weights_nonzero_at_fixpoints():
    for f in fixpoints_N():
        ws = f.tangent.weight_list((4, 6, -18))
        assert len(ws) == 6 and all(ws)


def test_zero_multiplicities_dropped_and_rank():
    u = VirtualRep({(1, 0, 0): 2, (0, 1, 0): 0, (0, 0, 1): -1})
    assert u.terms == {(1, 0, 0): 2, (0, 0, 1): -1}
    assert u.rank == 1


def test_half_integer_exponents_normalize():
    assert character("1/2", 2, Fraction(4, 2)) == (Fraction(1, 2), 2, 2)
    assert type(character(Fraction(4, 2))[0]) is int


def test_debug_strings_sorted():
    # lexicographic on exponent triples
    assert (lam(0) * 2 + lam(1)).debug_strings() == ["1 × λ1", "2 × λ0"]
    assert VirtualRep.one().debug_strings() == ["1 × 1"]


@settings(max_examples=60, deadline=None)
@given(effective, effective)
def test_rank_multiplicative(u, v):
    assert (u * v).rank == u.rank * v.rank


@settings(max_examples=60, deadline=None)
@given(effective, st.integers(0, 4))
def test_sym_and_wedge_ranks(u, n):
    assert u.sym(n).rank == comb(u.rank + n - 1, n)
    assert u.wedge2().rank == comb(u.rank, 2)


@settings(max_examples=60, deadline=None)
@given(virtual, st.fractions(-3, 3, max_denominator=4), st.fractions(-3, 3, max_denominator=4))
def test_power_k_composes(u, a, b):
    assert u.power_k(a).power_k(b) == u.power_k(a * b)


@settings(max_examples=60, deadline=None)
@given(effective, st.tuples(st.integers(-20, 20), st.integers(-20, 20), st.integers(-20, 20)))
def test_dual_weight_product(u, omega):
    ws = u.weight_list(omega)
    if not all(ws):
        return
    assert prod(u.dual().weight_list(omega)) == (-1) ** u.rank * prod(ws)


@settings(max_examples=60, deadline=None)
@given(virtual, virtual, virtual)
def test_ring_axioms(u, v, w):
    assert (u + v) * w == u * w + v * w
    assert (u * v) * w == u * (v * w)
    assert u - u == VirtualRep()
    assert (u * v).dual() == u.dual() * v.dual()


@settings(max_examples=40, deadline=None)
@given(effective)
def test_det_is_top_wedge(u):
    assert u.wedge(u.rank) == u.det()
    assert u.det().multiplicity(TRIVIAL) in (0, 1)
