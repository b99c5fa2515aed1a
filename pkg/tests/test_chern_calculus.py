from fractions import Fraction
from itertools import combinations
from math import prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artifact.chern_calculus import (
    GradedRing,
    MPoly,
    TotalChernClass,
    chern_functor,
    claim_relations,
    dual,
    integrate,
    p2_times_p2,
    ring_reduce_mul,
    sym2,
    sym_d,
    tensor_line,
    wedge2,
)
from artifact.intersection_counts import MONOMIAL_VALUES, chern_V, lines_ring, relation_residues, ring_N
from artifact.localization import chern_classes
from artifact.rep_ring import VirtualRep


def free_ring(ranks, top):
    """Q[c_{1,1}..c_{k,r_k}] truncated above degree ``top``."""
    degrees = [i for r in ranks for i in range(1, r + 1)]
    nil = {j: top // d + 1 for j, d in enumerate(degrees)}
    names = [f"c{k}_{i}" for k, r in enumerate(ranks) for i in range(1, r + 1)]
    return GradedRing(names, degrees, nil, {}, top, {})


def evaluate(cls, values):
    return sum((a * prod(Fraction(v) ** e for v, e in zip(values, m)) for m, a in cls.coeffs.items()), Fraction(0))


def esym(ws, k):
    return sum((prod(c) for c in combinations(ws, k)), 0)


ints = st.integers(-6, 6)


def totals(ring, ranks):
    out, off = [], 0
    for r in ranks:
        gens = [ring.gen(ring.names[off + i]) for i in range(r)]
        out.append(TotalChernClass.of_classes(ring, gens))
        off += r
    return out


def check_against_reps(functor, ranks, roots, rep_fn):
    out_rank = len(rep_fn([VirtualRep([(1, 0, 0)] * r) for r in ranks]).characters())
    ring = free_ring(ranks, out_rank)
    c = chern_functor(functor, *totals(ring, ranks))
    values = [esym(ws, i) for ws in roots for i in range(1, len(ws) + 1)]
    # characters lambda_0^w with omega = (1, 0, 0) have weight w
    reps = [VirtualRep([(w, 0, 0) for w in ws]) for ws in roots]
    expected = chern_classes(rep_fn(reps), (1, 0, 0), out_rank)
    assert [evaluate(c[k], values) for k in range(out_rank + 1)] == expected


@settings(max_examples=20, deadline=None)
@given(st.lists(ints, min_size=1, max_size=4))
def test_dual_against_reps(ws):
    check_against_reps("dual", (len(ws),), [ws], lambda r: r[0].dual())


@settings(max_examples=20, deadline=None)
@given(st.lists(ints, min_size=1, max_size=3))
def test_sym2_against_reps(ws):
    check_against_reps("sym2", (len(ws),), [ws], lambda r: r[0].sym(2))


@settings(max_examples=20, deadline=None)
@given(st.lists(ints, min_size=2, max_size=4))
def test_wedge2_against_reps(ws):
    check_against_reps("wedge2", (len(ws),), [ws], lambda r: r[0].wedge2())


@settings(max_examples=20, deadline=None)
@given(st.lists(ints, min_size=2, max_size=2), st.integers(1, 4))
def test_sym_d_against_reps(ws, d):
    check_against_reps(("sym", d), (2,), [ws], lambda r: r[0].sym(d))


@settings(max_examples=20, deadline=None)
@given(st.lists(ints, min_size=1, max_size=3), st.lists(ints, min_size=1, max_size=2))
def test_tensor_against_reps(a, b):
    check_against_reps("tensor", (len(a), len(b)), [a, b], lambda r: r[0] * r[1])


def test_dual_rank_two_sign_rule():
    R = free_ring((2,), 2)
    c = dual(totals(R, (2,))[0])
    c1, c2 = R.gen("c0_1"), R.gen("c0_2")
    assert c[1] == -c1 and c[2] == c2


def test_sym2_rank_two_formula():
    R = free_ring((2,), 3)
    c = sym2(totals(R, (2,))[0])
    c1, c2 = R.gen("c0_1"), R.gen("c0_2")
    assert c[1] == c1 * 3
    assert c[2] == c1 * c1 * 2 + c2 * 4
    assert c[3] == c1 * c2 * 4


def test_tensor_line_on_line_bundle():
    R = free_ring((1, 1), 1)
    a, b = R.gen("c0_1"), R.gen("c1_1")
    assert tensor_line(TotalChernClass.line(a), b)[1] == a + b


def test_unsupported_functors_rejected():
    R = free_ring((4,), 4)
    with pytest.raises(ValueError):
        sym2(totals(R, (4,))[0])
    with pytest.raises(ValueError):
        sym_d(totals(free_ring((3,), 3), (3,))[0], 2)


def test_whitney_sum_on_split_bundle():
    R = free_ring((1, 1), 2)
    a, b = R.gen("c0_1"), R.gen("c1_1")
    split = TotalChernClass.line(a) * TotalChernClass.line(b)
    assert split[1] == a + b and split[2] == a * b
    assert (split / TotalChernClass.line(b))[1] == a
    assert (split / TotalChernClass.line(b))[2].is_zero()
    assert dual(split)[1] == -(a + b)


def test_nilpotent_ring_and_integration():
    R = p2_times_p2()
    t, tc = R.gen("tau"), R.gen("taucheck")
    assert ring_reduce_mul(t, t * t).is_zero()
    assert ring_reduce_mul(R.one(), t) == t
    assert integrate(t * t * tc * tc) == 1
    assert integrate(t * tc) == 0
    with pytest.raises(ValueError):
        ring_reduce_mul(t, ring_N().one())


def test_sigma_cube_relation_in_line_space():
    R = lines_ring()
    base = chern_V(p2_times_p2())
    s = R.gen("sigma")
    cs = [R.lift(base[i]) for i in range(4)]
    rhs = cs[1] * s * s - cs[2] * s + cs[3]
    assert s * s * s == rhs


def test_c4_of_V_vanishes():
    cV = chern_V(p2_times_p2())
    assert cV[4].is_zero()
    assert cV.is_honest()


@settings(max_examples=25, deadline=None)
@given(st.lists(st.sampled_from(["tau", "taucheck", "sigma"]), min_size=3, max_size=3))
def test_line_space_associative(names):
    R = lines_ring()
    a, b, c = (R.gen(n) for n in names)
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a


def test_pairing_ring_of_N():
    R = ring_N()
    g = R.pairing
    assert all(g[i][j] == g[j][i] for i in range(13) for j in range(13))
    assert g[1][11] == 1 and g[0][12] == 1
    inv = R.inverse_pairing
    for i in range(13):
        for j in range(13):
            assert sum(g[i][k] * inv[k][j] for k in range(13)) == (1 if i == j else 0)


def test_integrals_on_N():
    R = ring_N()
    g1 = R.basis_class(1)
    assert (g1**6).integrate() == 57
    assert (g1**5).integrate() == 0
    d2 = R.basis_class(4)
    assert (d2**3).integrate() == 2


def test_claim_relations_vanish_against_complements():
    assert len(claim_relations()) > 0
    assert set(relation_residues()) == {0}


def test_claim_relation_check_detects_a_wrong_table(monkeypatch):
    import artifact.intersection_counts as ic

    bad = dict(MONOMIAL_VALUES)
    bad[(0, 0, 2, 0)] = 2
    monkeypatch.setattr(ic, "MONOMIAL_VALUES", bad)
    assert any(r != 0 for r in ic.relation_residues())


def test_mpoly_basics():
    x, y = MPoly.var(2, 0), MPoly.var(2, 1)
    assert (x + y) ** 2 == x * x + x * y * 2 + y * y
    assert ((x + y) ** 3).truncate([1, 1], 2).is_zero()
