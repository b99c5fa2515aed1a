"""Bott's residue formula over finite lists of isolated fixpoints.

An integrand is a polynomial in Chern classes of named bundles and in the
psi-class c. At a fixpoint every Chern class becomes an elementary symmetric
function of the weights of the corresponding representation.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .exact_algebra import rat
from .geometry_data import FixpointRecord
from .rep_ring import VirtualRep, char_weight

PSI = ("psi",)


class WeightDegeneracy(ValueError):
    """A tangent weight vanishes at the chosen one-parameter subgroup."""

    def __init__(self, point_id: str, omega):
        super().__init__(f"weights {tuple(omega)} are degenerate at fixpoint {point_id}")
        self.point_id = point_id
        self.omega = tuple(omega)


class IntegrandSpec:
    """Polynomial in symbols ("c", bundle, i) standing for c_i(bundle) and
    PSI standing for the psi-class. Monomials are sorted tuples of
    (symbol, exponent)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, Fraction] | None = None):
        self.terms = {m: rat(a) for m, a in (terms or {}).items() if a}

    @classmethod
    def const(cls, a) -> "IntegrandSpec":
        return cls({(): rat(a)})

    @staticmethod
    def _sym_degree(sym) -> int:
        return 1 if sym == PSI else sym[2]

    @property
    def degree(self) -> int:
        """Maximal total degree of a monomial (0 for the zero integrand)."""
        return max((sum(self._sym_degree(s) * e for s, e in m) for m in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        return len({sum(self._sym_degree(s) * e for s, e in m) for m in self.terms}) <= 1

    def __add__(self, other) -> "IntegrandSpec":
        other = _as_spec(other)
        acc = dict(self.terms)
        for m, a in other.terms.items():
            acc[m] = acc.get(m, Fraction(0)) + a
        return IntegrandSpec(acc)

    __radd__ = __add__

    def __neg__(self) -> "IntegrandSpec":
        return IntegrandSpec({m: -a for m, a in self.terms.items()})

    def __sub__(self, other) -> "IntegrandSpec":
        return self + (-_as_spec(other))

    def __mul__(self, other) -> "IntegrandSpec":
        other = _as_spec(other)
        acc: dict[tuple, Fraction] = {}
        for m1, a in self.terms.items():
            for m2, b in other.terms.items():
                d = dict(m1)
                for s, e in m2:
                    d[s] = d.get(s, 0) + e
                m = tuple(sorted(d.items()))
                acc[m] = acc.get(m, Fraction(0)) + a * b
        return IntegrandSpec(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntegrandSpec":
        out = IntegrandSpec.const(1)
        for _ in range(n):
            out = out * self
        return out

    def symbols(self) -> set:
        return {s for m in self.terms for s, _ in m}

    def evaluate(self, values: Mapping) -> Fraction:
        total = Fraction(0)
        for m, a in self.terms.items():
            v = a
            for s, e in m:
                v *= values[s] ** e
            total += v
        return total

    def __repr__(self) -> str:
        return f"IntegrandSpec({self.terms})"


def _as_spec(x) -> IntegrandSpec:
    return x if isinstance(x, IntegrandSpec) else IntegrandSpec.const(x)


def chern(bundle: str, i: int) -> IntegrandSpec:
    if i == 0:
        return IntegrandSpec.const(1)
    return IntegrandSpec({((("c", bundle, i), 1),): Fraction(1)})


def psi() -> IntegrandSpec:
    return IntegrandSpec({((PSI, 1),): Fraction(1)})


def gamma(i: int, bundle: str = "E") -> IntegrandSpec:
    """gamma_i = (-1)^i c_i(bundle)."""
    return chern(bundle, i) * (-1) ** i


def top_chern(bundle: str, rank: int) -> IntegrandSpec:
    return chern(bundle, rank)


def chern_classes(rep: VirtualRep, omega: Sequence, upto: int) -> list[Fraction]:
    """Equivariant c_0..c_upto of a (virtual) rep at the weight vector."""
    c = [Fraction(1)] + [Fraction(0)] * upto
    for ch, m in rep.items():
        w = char_weight(ch, omega)
        if m > 0:
            for _ in range(m):
                for k in range(upto, 0, -1):
                    c[k] += w * c[k - 1]
        else:
            for _ in range(-m):
                for k in range(1, upto + 1):
                    c[k] -= w * c[k - 1]
    return c


def validate_weights(points: Iterable[FixpointRecord], omega: Sequence) -> None:
    for f in points:
        for ch, _ in f.tangent.items():
            if char_weight(ch, omega) == 0:
                raise WeightDegeneracy(f.id, omega)


def bott_integral(points: Sequence[FixpointRecord], integrand: IntegrandSpec, omega: Sequence) -> Fraction:
    """Sum over fixpoints of P(weights) / (|Aut| * euler(tangent))."""
    omega = tuple(rat(w) for w in omega)
    if points:
        dim = points[0].tangent.rank
        if integrand.degree > dim:
            raise ValueError(f"integrand degree {integrand.degree} exceeds dimension {dim}")
    need: dict[str, int] = {}
    for s in integrand.symbols():
        if s != PSI:
            need[s[1]] = max(need.get(s[1], 0), s[2])
    total = Fraction(0)
    for f in points:
        euler = Fraction(1)
        for ch, m in f.tangent.items():
            w = char_weight(ch, omega)
            if w == 0:
                raise WeightDegeneracy(f.id, omega)
            euler *= Fraction(w) ** m
        values = {}
        for name, top in need.items():
            cs = chern_classes(f.bundles[name], omega, top)
            for i in range(1, top + 1):
                values[("c", name, i)] = cs[i]
        if PSI in integrand.symbols():
            values[PSI] = char_weight(f.psi, omega) if f.psi is not None else Fraction(0)
        total += integrand.evaluate(values) / (euler * f.aut)
    return total


# ---------------------------------------------------------------- default weights


def all_fixpoint_records() -> list[FixpointRecord]:
    from .geometry_data import build_M02_fixpoints, build_M11_fixpoints, fixlines_N, fixpoints_N

    recs = [f.record() for f in fixpoints_N()]
    recs += [FixpointRecord(L.id, L.moduli_tangent()) for L in fixlines_N()]
    recs += [f.record() for f in build_M02_fixpoints()]
    recs += [f.record() for f in build_M11_fixpoints()]
    return recs


def is_valid(omega: Sequence) -> bool:
    try:
        validate_weights(all_fixpoint_records(), omega)
    except WeightDegeneracy:
        return False
    return True


@lru_cache(maxsize=None)
def default_weights(seed: int = 0, bound: int = 20) -> tuple[int, int, int]:
    """First triple from a seeded search over [-bound, bound]^3 that is
    generic for every fixpoint list in the package."""
    rng = random.Random(seed)
    recs = all_fixpoint_records()
    while True:
        omega = tuple(rng.randint(-bound, bound) for _ in range(3))
        try:
            validate_weights(recs, omega)
        except WeightDegeneracy:
            continue
        return omega


def parse_weights(text: str) -> tuple[int, int, int]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3:
        raise ValueError("weights must be three comma-separated integers")
    return tuple(int(p) for p in parts)
