"""Counts obtained from Chow rings: the degree-6 monomial values on N,
lines on the three Calabi-Yau sections via the moduli of lines, and the
(0,2)-conic contributions via the projective bundle H^{0,2}.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Sequence

from .chern_calculus import (
    ChowClass,
    GradedRing,
    MPoly,
    N_CLASS_NAMES,
    TotalChernClass,
    chow_ring_N,
    claim_relations,
    degree6_monomials,
    dual,
    p2_times_p2,
    projective_bundle_ring,
    sym2,
    tensor_line,
    wedge2,
)
from .geometry_data import fixpoints_N
from .localization import IntegrandSpec, bott_integral, chern, default_weights, gamma

# Monomial values on N; keys are exponents of (gamma1, gamma2, gamma3, delta2).
MONOMIAL_VALUES: dict[tuple[int, int, int, int], int] = {
    (4, 1, 0, 0): 27,
    (4, 0, 0, 1): 18,
    (3, 0, 1, 0): 5,
    (2, 2, 0, 0): 14,
    (2, 1, 0, 1): 9,
    (2, 0, 0, 2): 6,
    (1, 1, 1, 0): 3,
    (1, 0, 1, 1): 2,
    (0, 3, 0, 0): 9,
    (0, 2, 0, 1): 5,
    (0, 1, 0, 2): 3,
    (0, 0, 2, 0): 1,
    (6, 0, 0, 0): 57,
    (0, 0, 0, 3): 2,
}


class DataIntegrityError(RuntimeError):
    pass


def monomial_name(m: Sequence[int]) -> str:
    parts = []
    for name, e in zip(("γ1", "γ2", "γ3", "δ2"), m):
        if e:
            parts.append(name if e == 1 else f"{name}^{e}")
    return "".join(parts) or "1"


def monomial_integrand(m: Sequence[int]) -> IntegrandSpec:
    g1, g2, g3, d2 = gamma(1), gamma(2), gamma(3), chern("F", 2)
    return g1 ** m[0] * g2 ** m[1] * g3 ** m[2] * d2 ** m[3]


def monomial_values_N(omega=None) -> dict[tuple[int, ...], Fraction]:
    """Bott evaluation of every degree-6 monomial in gamma1..3, delta2."""
    omega = omega or default_weights()
    pts = [f.record() for f in fixpoints_N()]
    return {m: bott_integral(pts, monomial_integrand(m), omega) for m in degree6_monomials()}


def euler_characteristic_N(omega=None) -> Fraction:
    omega = omega or default_weights()
    pts = [f.record() for f in fixpoints_N()]
    return bott_integral(pts, chern("T", 6), omega)


@lru_cache(maxsize=None)
def ring_N():
    """A*(N) on the basis T0..T12, once the Bott values confirm the monomial values."""
    values = monomial_values_N()
    for m, v in MONOMIAL_VALUES.items():
        if values[m] != v:
            raise DataIntegrityError(f"Bott value of {monomial_name(m)} is {values[m]}, expected {v}")
    return chow_ring_N({m: Fraction(v) for m, v in MONOMIAL_VALUES.items()})


# ---------------------------------------------------------------- lines


@lru_cache(maxsize=None)
def _base_ring() -> GradedRing:
    return p2_times_p2()


def _omega_tau(ring) -> TotalChernClass:
    """c(Omega(tau)) = 1 - tau + tau^2, pulled back to ``ring``."""
    tau = ring.gen("tau")
    return TotalChernClass(ring, 2, [ring.one(), -tau, tau * tau])


def chern_V(ring) -> TotalChernClass:
    """c(V) = c(Omega(tau))^3 c(wedge2 Omega(tau))^-1 c(Omega(tau)(-taucheck))^-1."""
    om = _omega_tau(ring)
    tc = ring.gen("taucheck")
    c = om * om * om / wedge2(om) / tensor_line(om, -tc)
    return TotalChernClass(ring, 3, c.comps)


@lru_cache(maxsize=None)
def lines_ring() -> GradedRing:
    """A*(M_{0,0}(N,1)) = Q[tau, taucheck, sigma]/(tau^3, taucheck^3, r)."""
    base = _base_ring()
    cV = chern_V(base)
    return projective_bundle_ring(base, "sigma", cV.classes(), (2, 2))


def _lift_total(ring, c: TotalChernClass) -> TotalChernClass:
    return TotalChernClass(ring, c.rank, [ring.lift(x) for x in c.comps])


def line_bundles() -> dict[str, TotalChernClass]:
    """Total Chern classes on the line space of the three bundles' restrictions."""
    R = lines_ring()
    tau, tc, sigma = R.gen("tau"), R.gen("taucheck"), R.gen("sigma")
    cV = _lift_total(R, chern_V(_base_ring()))
    # pi_* O_C(sigma-check) = coker(O(-sigma) -> V^dual), rank 2
    W = dual(cV) / TotalChernClass.line(-sigma)
    W = TotalChernClass(R, 2, W.comps)
    # wedge2 (Omega(tau) (x) O(-taucheck))^dual has c1 = tau + 2 taucheck
    A = tau + tc * 2
    Op = tensor_line(W, A)
    O2p = sym2(Op)
    Fv = TotalChernClass.line(tc + tau) * tensor_line(W, tc)
    Fv = TotalChernClass(R, 3, Fv.comps)
    return {"O(p)": Op, "O(2p)": O2p, "F^v": Fv, "S2F^v": sym2(Fv)}


def line_counts() -> tuple[int, int, int]:
    b = line_bundles()
    x = (b["O(p)"] * b["O(p)"] * b["O(p)"])[6].integrate()
    y = (b["F^v"] * b["O(2p)"])[6].integrate()
    z = b["S2F^v"][6].integrate()
    return tuple(_as_int(v) for v in (x, y, z))


# ---------------------------------------------------------------- (0,2)-conics


@lru_cache(maxsize=None)
def conic02_ring() -> GradedRing:
    """A*(H^{0,2}) = Q[tau, taucheck, xi]/(tau^3, taucheck^3, r) with r the
    Grothendieck relation of S_2 V."""
    base = _base_ring()
    cS2V = sym2(chern_V(base))
    return projective_bundle_ring(base, "xi", cS2V.classes(), (2, 2))


def conic02_bundles() -> dict[str, TotalChernClass]:
    R = conic02_ring()
    tau, tc, xi = R.gen("tau"), R.gen("taucheck"), R.gen("xi")
    cV = _lift_total(R, chern_V(_base_ring()))
    Vd = dual(cV)
    A = tau + tc * 2
    # pi'_* O(2 sigma-check) = S_2 V^dual / O(-xi), rank 5
    P2 = sym2(Vd) / TotalChernClass.line(-xi)
    P2 = TotalChernClass(R, 5, P2.comps)
    Op = tensor_line(Vd, A)
    O2p = tensor_line(P2, A * 2)
    Fv = TotalChernClass(R, 4, (TotalChernClass.line(tc + tau) * tensor_line(Vd, tc)).comps)
    S2Fv = TotalChernClass.line((tc + tau) * 2) * tensor_line(Vd, tc * 2 + tau) * tensor_line(P2, tc * 2)
    S2Fv = TotalChernClass(R, 9, S2Fv.comps)
    return {"O(p)": Op, "O(2p)": O2p, "F^v": Fv, "S2F^v": S2Fv}


def conic02_counts() -> tuple[int, int, int]:
    b = conic02_bundles()
    x = (b["O(p)"] * b["O(p)"] * b["O(p)"])[9].integrate()
    y = (b["F^v"] * b["O(2p)"])[9].integrate()
    z = b["S2F^v"][9].integrate()
    return tuple(_as_int(v) for v in (x, y, z))


def _as_int(v: Fraction) -> int:
    if v.denominator != 1:
        raise DataIntegrityError(f"count {v} is not an integer")
    return int(v)


def _to_gamma(p: MPoly) -> MPoly:
    """(c1(E), c2(E), c3(E), c1(F), c2(F)) -> (gamma1, gamma2, gamma3, delta2),
    using c_i(E) = (-1)^i gamma_i and c1(F) = c1(E)."""
    out = MPoly(4)
    g = [MPoly.var(4, i) for i in range(4)]
    subs = [-g[0], g[1], -g[2], -g[0], g[3]]
    for m, a in p.terms.items():
        term = MPoly.const(4, a)
        for x, e in zip(subs, m):
            term = term * x**e
        out = out + term
    return out


def relation_residues() -> list[Fraction]:
    """Integrals over N of every coordinate of r0, r1, r2 times every
    monomial of complementary degree; all vanish when the presentation
    is consistent with the monomial table."""
    values = {m: Fraction(v) for m, v in MONOMIAL_VALUES.items()}
    monos = [m for m in product(range(7), range(4), range(3), range(4))]
    out = []
    for coord in claim_relations():
        c = _to_gamma(coord)
        for m in monos:
            prod_ = c * MPoly(4, {m: Fraction(1)})
            total = Fraction(0)
            for mm, a in prod_.terms.items():
                deg = mm[0] + 2 * mm[1] + 3 * mm[2] + 2 * mm[3]
                if deg == 6:
                    total += a * values[mm]
            out.append(total)
    return out
