"""Torus-fixed data for N and for the moduli spaces of lines and conics on it.

All tables are stored as a handful of representatives written in terms of
monomials in x0, x1, x2 (x_i has character lambda_i); the S3 action permuting
the coordinates generates the full lists.

Bundles restricted to a fixed rational curve C are sums of characters times
powers of a chosen degree-one line bundle O_C(1). Knowing the two characters
of H^0(O_C(1)) is enough to write down H^0 and H^1 of any such sum, which is
how tangent spaces and integrand representations are assembled.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import permutations
from typing import Iterable, Mapping, Sequence

from .rep_ring import (
    TRIVIAL,
    Character,
    VirtualRep,
    V_STD,
    char_mul,
    char_permute,
    char_pow,
    character,
)

PERMS: tuple[tuple[int, int, int], ...] = tuple(permutations(range(3)))

Monomial = tuple[int, int, int]


def _ch(m: Sequence) -> Character:
    return character(*m)


def _rep(*chars: Character) -> VirtualRep:
    return VirtualRep(list(chars))


def _perm_mono(m: Monomial, perm: Sequence[int]) -> Monomial:
    out = [0, 0, 0]
    for i in range(3):
        out[perm[i]] = m[i]
    return tuple(out)


def _single(rep: VirtualRep) -> Character:
    (ch,) = rep.characters()
    return ch


# ---------------------------------------------------------------- records


@dataclass(frozen=True)
class FixpointRecord:
    """A torus-fixed point of a moduli space, ready for Bott's formula.

    ``bundles`` maps a name to the representation on the fiber of the
    integrand bundle; ``psi`` is the character whose weight is c_1 of the
    cotangent line at the first marking (None when no marking exists).
    """

    id: str
    tangent: VirtualRep
    aut: int = 1
    bundles: Mapping[str, VirtualRep] = field(default_factory=dict)
    psi: Character | None = None

    def to_json(self) -> dict:
        out = {
            "id": self.id,
            "aut": self.aut,
            "tangent": self.tangent.debug_strings(),
            "bundles": {k: v.debug_strings() for k, v in self.bundles.items()},
        }
        if self.psi is not None:
            out["psi"] = VirtualRep([self.psi]).debug_strings()
        return out


# ---------------------------------------------------------------- fixpoints of N

# Representatives: generators of E (as monomials) and characters of the two
# syzygies spanning F, one row per projective type.
_N_TYPES: tuple[tuple[tuple[Monomial, ...], tuple[Monomial, ...]], ...] = (
    (((0, 1, 1), (1, 1, 0), (1, 0, 1)), ((1, 1, 1), (1, 1, 1))),
    (((0, 2, 0), (0, 1, 1), (1, 0, 1)), ((0, 2, 1), (1, 1, 1))),
    (((0, 2, 0), (0, 1, 1), (0, 0, 2)), ((0, 2, 1), (0, 1, 2))),
    (((0, 2, 0), (0, 1, 1), (1, 1, 0)), ((0, 2, 1), (1, 2, 0))),
)


@dataclass(frozen=True)
class FixpointN:
    id: str
    type: int
    perm: tuple[int, int, int]
    E: VirtualRep
    F: VirtualRep
    isotropy_order: int

    @property
    def tangent(self) -> VirtualRep:
        return tangent_rep_at_point_of_N(self.E, self.F)

    def record(self) -> FixpointRecord:
        return FixpointRecord(self.id, self.tangent, 1, {"E": self.E, "F": self.F, "T": self.tangent})


def tangent_rep_at_point_of_N(E: VirtualRep, F: VirtualRep) -> VirtualRep:
    """[T_y N] = [F]^(-1)[E](l0+l1+l2) - [E]^(-1)[E] - [F]^(-1)[F] + 1."""
    T = F.dual() * E * V_STD - E.dual() * E - F.dual() * F + 1
    if not T.is_effective() or T.rank != 6:
        raise ValueError(f"tangent representation is not an honest rank-6 rep: {T}")
    return T


@lru_cache(maxsize=None)
def fixpoints_N() -> tuple[FixpointN, ...]:
    out: list[FixpointN] = []
    seen: set[VirtualRep] = set()
    for t, (egen, fgen) in enumerate(_N_TYPES, start=1):
        orbit = []
        for perm in PERMS:
            E = VirtualRep([_ch(_perm_mono(m, perm)) for m in egen])
            if E in seen:
                continue
            seen.add(E)
            F = VirtualRep([_ch(_perm_mono(m, perm)) for m in fgen])
            orbit.append((perm, E, F))
        iso = len(PERMS) // len(orbit)
        for k, (perm, E, F) in enumerate(orbit):
            out.append(FixpointN(f"N{t}.{k}", t, perm, E, F, iso))
    return tuple(out)


def fixpoint_N_by_E(E: VirtualRep) -> FixpointN:
    for f in fixpoints_N():
        if f.E == E:
            return f
    raise KeyError(f"no fixpoint of N with [E] = {E}")


# ---------------------------------------------------------------- bundles on fixed curves


class CurveBundle:
    """Sum of terms chi * O_C(k) on a torus-fixed P^1, with integer
    multiplicities. Cohomology is taken relative to the two characters of
    H^0(O_C(1))."""

    __slots__ = ("_terms", "_key")

    def __init__(self, terms: Mapping[tuple[Character, int], int] | Iterable[tuple[Character, int]] = ()):
        acc: dict[tuple[Character, int], int] = {}
        items = terms.items() if isinstance(terms, Mapping) else ((t, 1) for t in terms)
        for (ch, k), m in items:
            key = (tuple(ch), int(k))
            acc[key] = acc.get(key, 0) + m
        self._terms = {t: m for t, m in acc.items() if m}
        self._key = tuple(sorted(self._terms.items()))

    @classmethod
    def from_rep(cls, rep: VirtualRep, degree: int = 0) -> "CurveBundle":
        return cls({(ch, degree): m for ch, m in rep.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, CurveBundle) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    @property
    def rank(self) -> int:
        return sum(self._terms.values())

    @property
    def degree(self) -> int:
        return sum(k * m for (_, k), m in self._terms.items())

    def __add__(self, other: "CurveBundle") -> "CurveBundle":
        acc = dict(self._terms)
        for t, m in other._terms.items():
            acc[t] = acc.get(t, 0) + m
        return CurveBundle(acc)

    def __neg__(self) -> "CurveBundle":
        return CurveBundle({t: -m for t, m in self._terms.items()})

    def __sub__(self, other: "CurveBundle") -> "CurveBundle":
        return self + (-other)

    def __mul__(self, other: "CurveBundle") -> "CurveBundle":
        acc: dict[tuple[Character, int], int] = {}
        for (x, a), m in self._terms.items():
            for (y, b), n in other._terms.items():
                t = (char_mul(x, y), a + b)
                acc[t] = acc.get(t, 0) + m * n
        return CurveBundle(acc)

    def dual(self) -> "CurveBundle":
        return CurveBundle({(char_pow(ch, -1), -k): m for (ch, k), m in self._terms.items()})

    def _summands(self) -> list[tuple[Character, int]]:
        if any(m < 0 for m in self._terms.values()):
            raise ValueError("virtual curve bundle has no summand list")
        return [t for t, m in self._key for _ in range(m)]

    def sym2(self) -> "CurveBundle":
        s = self._summands()
        out: dict[tuple[Character, int], int] = {}
        for i in range(len(s)):
            for j in range(i, len(s)):
                t = (char_mul(s[i][0], s[j][0]), s[i][1] + s[j][1])
                out[t] = out.get(t, 0) + 1
        return CurveBundle(out)

    def det(self) -> "CurveBundle":
        ch, k = TRIVIAL, 0
        for (x, a), m in self._terms.items():
            ch, k = char_mul(ch, char_pow(x, m)), k + a * m
        return CurveBundle([(ch, k)])

    def tensor_power(self, n: int) -> "CurveBundle":
        out = CurveBundle([(TRIVIAL, 0)])
        for _ in range(n):
            out = out * self
        return out

    def h0(self, sections: VirtualRep) -> VirtualRep:
        """H^0, given the rep ``sections`` = H^0(O_C(1)) of rank 2."""
        out = VirtualRep()
        for (ch, k), m in self._terms.items():
            if k >= 0:
                out = out + VirtualRep([ch]) * sections.sym(k) * m
        return out

    def h1(self, sections: VirtualRep) -> VirtualRep:
        """H^1 via Serre duality: H^1(O(-m)) = det(S)^(-1) Sym^(m-2)(S^dual)."""
        out = VirtualRep()
        inv_det = sections.wedge(2).dual()
        for (ch, k), m in self._terms.items():
            if k <= -2:
                out = out + VirtualRep([ch]) * inv_det * sections.dual().sym(-k - 2) * m
        return out

    def euler(self, sections: VirtualRep) -> VirtualRep:
        return self.h0(sections) - self.h1(sections)

    def fiber(self, o1_fiber: Character) -> VirtualRep:
        """Fiber at a fixed point where O_C(1) has character ``o1_fiber``."""
        acc: dict[Character, int] = {}
        for (ch, k), m in self._terms.items():
            x = char_mul(ch, char_pow(o1_fiber, k))
            acc[x] = acc.get(x, 0) + m
        return VirtualRep(acc)


@dataclass(frozen=True)
class FixedCurve:
    """A torus-fixed map from P^1 to N, described by the pullbacks of E and F.

    ``o1`` holds the characters of O_C(1) at the two fixed points of C, so
    H^0(O_C(1)) = o1[0] + o1[1].
    """

    E: CurveBundle
    F: CurveBundle
    o1: tuple[Character, Character]

    @property
    def sections(self) -> VirtualRep:
        return _rep(*self.o1)

    def h0_tangent_curve(self) -> VirtualRep:
        S = self.sections
        return S.dual() * S - 1

    def tangent_at(self, i: int) -> VirtualRep:
        """Tangent line of C at its i-th fixed point."""
        return VirtualRep([char_mul(self.o1[i], char_pow(self.o1[1 - i], -1))])

    def h0_tangent_N(self) -> VirtualRep:
        """H^0(f^*TN) from the presentation 0 -> O -> End E + End F ->
        Hom(F, E (x) V) -> TN -> 0, with the H^1(End F) correction that is
        nonzero only for double covers."""
        S = self.sections
        FE = self.F.dual() * self.E
        EE = self.E.dual() * self.E
        FF = self.F.dual() * self.F
        return FE.h0(S) * V_STD - EE.h0(S) - FF.h0(S) + 1 + FF.h1(S)

    def euler_tangent_N(self) -> VirtualRep:
        S = self.sections
        FE = self.F.dual() * self.E
        EE = self.E.dual() * self.E
        FF = self.F.dual() * self.F
        return FE.euler(S) * V_STD - EE.euler(S) - FF.euler(S) + 1

    def map_tangent(self) -> VirtualRep:
        """T_f of the moduli of unmarked stable maps (f an embedding or a
        cover with two branch points)."""
        return self.h0_tangent_N() - self.h0_tangent_curve()

    def E_at(self, i: int) -> VirtualRep:
        return self.E.fiber(self.o1[i])

    def F_at(self, i: int) -> VirtualRep:
        return self.F.fiber(self.o1[i])

    def integrand_reps(self) -> dict[str, VirtualRep]:
        S = self.sections
        Op = self.E.dual().det()
        Fd = self.F.dual()
        return {
            "O(p)": Op.h0(S),
            "O(2p)": Op.tensor_power(2).h0(S),
            "F^v": Fd.h0(S),
            "S2F^v": Fd.sym2().h0(S),
        }


def point_integrand_reps(E: VirtualRep, F: VirtualRep) -> dict[str, VirtualRep]:
    """Fibers at a point of N of O(p), O(2p), F^dual, S_2 F^dual."""
    Op = E.det().dual()
    return {"O(p)": Op, "O(2p)": Op * Op, "F^v": F.dual(), "S2F^v": F.dual().sym(2)}


# ---------------------------------------------------------------- fixlines

# For each type: the form cutting out l, the two forms vanishing at p and the
# moving generator of the net at t = 0 and t = infinity.
_LINE_TYPES: dict[int, tuple[Monomial, tuple[Monomial, Monomial], Monomial, Monomial]] = {
    1: ((1, 0, 0), ((0, 1, 0), (0, 0, 1)), (0, 2, 0), (0, 0, 2)),
    2: ((1, 0, 0), ((0, 1, 0), (0, 0, 1)), (0, 1, 1), (0, 2, 0)),
    3: ((0, 1, 0), ((0, 1, 0), (0, 0, 1)), (1, 1, 0), (0, 0, 2)),
    4: ((0, 1, 0), ((0, 1, 0), (0, 0, 1)), (0, 0, 2), (1, 0, 1)),
    5: ((0, 1, 0), ((0, 1, 0), (0, 0, 1)), (1, 0, 1), (1, 1, 0)),
}


@dataclass(frozen=True)
class FixlineN:
    """A torus-fixed line in N with its elementary representations."""

    id: str
    type: int
    perm: tuple[int, int, int]
    I_p: VirtualRep  # H^0(I_p(1)), rank 2
    I_l: VirtualRep  # H^0(I_l(1)), rank 1
    O_f1: VirtualRep  # fiber of O(sigma-check) at t = 0
    O_f2: VirtualRep  # fiber of O(sigma-check) at t = infinity
    isotropy_order: int

    @property
    def S(self) -> VirtualRep:
        """H^0(O_L(sigma-check))."""
        return self.O_f1 + self.O_f2

    @property
    def flag(self) -> tuple[VirtualRep, VirtualRep]:
        """The point-line pair (p, l) of P(V) x P(V^dual) under the line."""
        return (self.I_p, self.I_l)

    @property
    def incident(self) -> bool:
        return self.type >= 3

    @cached_property
    def _curve(self) -> FixedCurve:
        Il, Ip = self.I_l, self.I_p
        E = CurveBundle.from_rep(Ip * Il) + CurveBundle([(TRIVIAL, -1)])
        F = CurveBundle.from_rep(Il * Ip.wedge2()) + CurveBundle.from_rep(Il, -1)
        return FixedCurve(E, F, (_single(self.O_f1), _single(self.O_f2)))

    def curve(self) -> FixedCurve:
        return self._curve

    @cached_property
    def _ends(self) -> tuple[tuple[VirtualRep, VirtualRep], tuple[VirtualRep, VirtualRep]]:
        C = self._curve
        return (C.E_at(0), C.E_at(1)), (C.F_at(0), C.F_at(1))

    @cached_property
    def _moduli_tangent(self) -> VirtualRep:
        return self.h0_TN() - self.h0_TL()

    def double_cover(self) -> FixedCurve:
        """The 2:1 cover branched over both fixed points of the line."""
        Il, Ip = self.I_l, self.I_p
        E = CurveBundle.from_rep(Ip * Il) + CurveBundle([(TRIVIAL, -2)])
        F = CurveBundle.from_rep(Il * Ip.wedge2()) + CurveBundle.from_rep(Il, -2)
        o1 = (char_pow(_single(self.O_f1), "1/2"), char_pow(_single(self.O_f2), "1/2"))
        return FixedCurve(E, F, o1)

    def E_at(self, i: int) -> VirtualRep:
        """Fiber of E at the fixed point t = 0 (i = 0) or t = infinity (i = 1)."""
        return self._ends[0][i]

    def F_at(self, i: int) -> VirtualRep:
        return self._ends[1][i]

    def endpoint(self, i: int) -> FixpointN:
        return fixpoint_N_by_E(self.E_at(i))

    def tangent_at(self, i: int) -> VirtualRep:
        """[T_{f_i} L] = [O_{f_j}]^(-1) [O_{f_i}]."""
        O = (self.O_f1, self.O_f2)
        return O[1 - i].dual() * O[i]

    def h0_TL(self) -> VirtualRep:
        return self.S.dual() * self.S - 1

    def h0_TN(self) -> VirtualRep:
        """[H^0(TN_L)] by the explicit formula for a line."""
        Ip, Il, S = self.I_p, self.I_l, self.S
        FE = Ip.dual() + Il.dual() + S * Ip
        EE = Ip.dual() * Ip + S * Ip * Il + 1
        FF = S * Ip.wedge2() + 2
        return FE * V_STD - EE - FF + 1

    def moduli_tangent(self) -> VirtualRep:
        """T at [L] of the moduli of lines in N."""
        return self._moduli_tangent

    def normal_to_incidence(self) -> VirtualRep:
        """Normal direction to the incidence p in l:  (V/H^0(I_p(1))) / H^0(I_l(1))."""
        return (V_STD - self.I_p) * self.I_l.dual()

    def obstruction_twist(self) -> VirtualRep:
        """Character factor of the O(-1) summand of TN_L for incident flags."""
        return self.I_l.dual() * self.I_p.wedge2().dual() * (V_STD - self.I_p)


def fixline_elementary_reps(type_: int, perm: Sequence[int]) -> FixlineN:
    l, p, m0, m1 = _LINE_TYPES[type_]
    I_l = _rep(_ch(_perm_mono(l, perm)))
    I_p = _rep(*(_ch(_perm_mono(m, perm)) for m in p))
    O1 = _rep(_ch(_perm_mono(m0, perm))).dual()
    O2 = _rep(_ch(_perm_mono(m1, perm))).dual()
    return FixlineN(f"L{type_}", type_, tuple(perm), I_p, I_l, O1, O2, 1)


def moving_generators(type_: int, perm: Sequence[int]) -> tuple[Monomial, Monomial]:
    _, _, m0, m1 = _LINE_TYPES[type_]
    return _perm_mono(m0, perm), _perm_mono(m1, perm)


def fixline_generators(type_: int, perm: Sequence[int], at_infinity: bool) -> list[Monomial]:
    """Monomial generators of the net on the fixline at t = 0 or infinity,
    in order: the two pencil generators and the moving one."""
    l, p, m0, m1 = _LINE_TYPES[type_]
    pencil = [tuple(a + b for a, b in zip(l, q)) for q in p]
    return [_perm_mono(m, perm) for m in pencil + [m1 if at_infinity else m0]]


@lru_cache(maxsize=None)
def fixlines_N() -> tuple[FixlineN, ...]:
    out: list[FixlineN] = []
    for t in sorted(_LINE_TYPES):
        orbit: list[FixlineN] = []
        keys: set = set()
        for perm in PERMS:
            L = fixline_elementary_reps(t, perm)
            key = (L.I_p, L.I_l, frozenset([L.O_f1, L.O_f2]))
            if key in keys:
                continue
            keys.add(key)
            orbit.append(L)
        iso = len(PERMS) // len(orbit)
        for k, L in enumerate(orbit):
            out.append(FixlineN(f"L{t}.{k}", t, L.perm, L.I_p, L.I_l, L.O_f1, L.O_f2, iso))
    return tuple(out)


# ---------------------------------------------------------------- splitting types


@dataclass(frozen=True)
class SplittingData:
    degrees: tuple[int, ...]
    # For lines over an incident flag: the character factor chi with
    # O(-1) component = chi (x) O_L(-sigma-check); None otherwise.
    obstruction_twist: VirtualRep | None


def tangent_splitting_line(type_: int) -> SplittingData:
    """Splitting type of TN restricted to a line of the given type (6 is the
    non-fixed line x1*<x1,x2> + <x2^2 + x0x1 + t x0x2>)."""
    if type_ in (1, 2):
        return SplittingData((2, 1, 0, 0, 0, 0), None)
    if type_ in (3, 4, 5, 6):
        L = fixline_elementary_reps(3, PERMS[0])
        return SplittingData((2, 1, 1, 0, 0, -1), L.obstruction_twist())
    raise ValueError(f"unknown line type {type_}")


# ---------------------------------------------------------------- M_{0,2}(N,1)


@dataclass(frozen=True)
class FixpointM02:
    line: FixlineN
    config: tuple[int, ...]  # (i, j): s1 -> f_i, s2 -> f_j ; (i,): both markings on a contracted component at f_i
    tangent: VirtualRep
    psi: Character
    E1: VirtualRep
    F1: VirtualRep
    E2: VirtualRep
    F2: VirtualRep

    def record(self) -> FixpointRecord:
        cfg = "".join(str(i + 1) for i in self.config)
        return FixpointRecord(
            f"{self.line.id}:{cfg}",
            self.tangent,
            1,
            {"E1": self.E1, "F1": self.F1, "E2": self.E2, "F2": self.F2},
            self.psi,
        )


@lru_cache(maxsize=None)
def build_M02_fixpoints() -> tuple[FixpointM02, ...]:
    out = []
    for L in fixlines_N():
        base = L.moduli_tangent()
        E = (L.E_at(0), L.E_at(1))
        F = (L.F_at(0), L.F_at(1))
        Tf = (L.tangent_at(0), L.tangent_at(1))
        for i, j in ((0, 1), (1, 0)):
            T = base + Tf[0] + Tf[1]
            psi = _single(Tf[i].dual())
            out.append(FixpointM02(L, (i, j), T, psi, E[i], F[i], E[j], F[j]))
        for i in (0, 1):
            T = base + Tf[i] * 2
            out.append(FixpointM02(L, (i,), T, TRIVIAL, E[i], F[i], E[i], F[i]))
    return tuple(out)


# ---------------------------------------------------------------- M^{1,1}

# Smooth fixed conics: entries a11, a21, a22 of the 2x3 matrix and the pencil
# of linear forms sweeping out the moving entry a32.
_SMOOTH_CONICS: tuple[tuple[Monomial, Monomial, Monomial, tuple[Monomial, Monomial]], ...] = (
    ((1, 0, 0), (0, 0, 1), (0, 1, 0), ((1, 0, 0), (0, 0, 1))),
    ((1, 0, 0), (0, 1, 0), (1, 0, 0), ((0, 1, 0), (0, 0, 1))),
)


@dataclass(frozen=True)
class FixpointM11:
    id: str
    kind: str
    tangent: VirtualRep
    aut: int
    integrands: Mapping[str, VirtualRep]

    def record(self) -> FixpointRecord:
        return FixpointRecord(self.id, self.tangent, self.aut, dict(self.integrands))


KINDS = (
    "smooth-conic",
    "line-pair",
    "boundary-embedded-pair",
    "boundary-double-cover-irreducible",
    "boundary-double-cover-reducible",
)


def smooth_conic_curve(kind: int, perm: Sequence[int]) -> FixedCurve:
    a11, a21, a22, pencil = _SMOOTH_CONICS[kind]
    a11, a21, a22 = (_ch(_perm_mono(m, perm)) for m in (a11, a21, a22))
    # a32 sweeps the pencil, so it is O_C(-1) with H^0(O_C(1)) the dual pencil.
    o1 = tuple(char_pow(_ch(_perm_mono(m, perm)), -1) for m in pencil)
    E = CurveBundle([(char_mul(a11, a22), 0), (a11, -1), (a21, -1)])
    F = CurveBundle([(char_mul(a11, a21), -1), (char_mul(a11, a22), -1)])
    return FixedCurve(E, F, o1)


def _smooth_conics() -> list[FixpointM11]:
    out = []
    seen = set()
    for kind in range(len(_SMOOTH_CONICS)):
        k = 0
        for perm in PERMS:
            C = smooth_conic_curve(kind, perm)
            key = (C.E, C.F, frozenset(C.o1))
            if key in seen:
                continue
            seen.add(key)
            out.append(FixpointM11(f"C{kind + 1}.{k}", "smooth-conic", C.map_tangent(), 1, C.integrand_reps()))
            k += 1
    return out


@lru_cache(maxsize=None)
def _line_integrands(L: FixlineN) -> dict[str, VirtualRep]:
    return L.curve().integrand_reps()


def _glued(lines: Sequence[tuple[FixlineN, int]]) -> tuple[VirtualRep, dict[str, VirtualRep]]:
    """Tangent and integrands of two lines glued at the fixed point y,
    given as (line, index of y on it), ignoring obstruction corrections."""
    (L1, i1), (L2, i2) = lines
    y = L1.endpoint(i1)
    t1, t2 = L1.tangent_at(i1), L2.tangent_at(i2)
    T = L1.moduli_tangent() + L2.moduli_tangent() + t1 * t2 + t1 + t2 - y.tangent
    pt = point_integrand_reps(y.E, y.F)
    a, b = _line_integrands(L1), _line_integrands(L2)
    return T, {k: a[k] + b[k] - pt[k] for k in a}


def _line_pairs() -> list[FixpointM11]:
    lines = fixlines_N()
    out = []
    n = 0
    for x in range(len(lines)):
        for z in range(x + 1, len(lines)):
            L1, L2 = lines[x], lines[z]
            if L1.flag == L2.flag:
                continue
            for i1 in (0, 1):
                for i2 in (0, 1):
                    if L1.E_at(i1) == L2.E_at(i2):
                        T, integ = _glued([(L1, i1), (L2, i2)])
                        out.append(FixpointM11(f"P{n}:{L1.id}+{L2.id}", "line-pair", T, 1, integ))
                        n += 1
    return out


def incident_flags() -> list[tuple[VirtualRep, VirtualRep]]:
    flags: list = []
    for L in fixlines_N():
        if L.incident and L.flag not in flags:
            flags.append(L.flag)
    return flags


def _boundary(flag_no: int, flag) -> list[FixpointM11]:
    lines = [L for L in fixlines_N() if L.flag == flag]
    assert len(lines) == 3
    out = []
    N_f = lines[0].normal_to_incidence()
    twist = lines[0].obstruction_twist()

    def h1_at(L: FixlineN, i: int) -> VirtualRep:
        O = (L.O_f1, L.O_f2)[i]
        return twist * O.dual()

    tag = f"B{flag_no}"
    for x in range(3):
        for z in range(x + 1, 3):
            L1, L2 = lines[x], lines[z]
            hits = [(i1, i2) for i1 in (0, 1) for i2 in (0, 1) if L1.E_at(i1) == L2.E_at(i2)]
            assert len(hits) == 1
            i1, i2 = hits[0]
            T, integ = _glued([(L1, i1), (L2, i2)])
            T = T + h1_at(L1, i1) - N_f
            out.append(FixpointM11(f"{tag}:{L1.id}+{L2.id}", "boundary-embedded-pair", T, 1, integ))
    for L in lines:
        C = L.double_cover()
        T = C.map_tangent() - N_f
        out.append(FixpointM11(f"{tag}:2{L.id}", "boundary-double-cover-irreducible", T, 2, C.integrand_reps()))
    for L in lines:
        for i in (0, 1):
            T, integ = _glued([(L, i), (L, i)])
            T = T + h1_at(L, i) - N_f
            out.append(FixpointM11(f"{tag}:{L.id}+{L.id}@{i}", "boundary-double-cover-reducible", T, 2, integ))
    return out


@lru_cache(maxsize=None)
def build_M11_fixpoints() -> tuple[FixpointM11, ...]:
    out = _smooth_conics() + _line_pairs()
    for k, flag in enumerate(incident_flags()):
        out += _boundary(k, flag)
    for f in out:
        if f.tangent.rank != 9 or not f.tangent.is_effective():
            raise ValueError(f"bad tangent space at {f.id}: {f.tangent}")
    return tuple(out)


# ---------------------------------------------------------------- dump


def dump_all() -> dict:
    return {
        "N": [
            {
                "id": f.id,
                "perm": list(f.perm),
                "isotropy": f.isotropy_order,
                "E": f.E.debug_strings(),
                "F": f.F.debug_strings(),
                "tangent": f.tangent.debug_strings(),
            }
            for f in fixpoints_N()
        ],
        "lines": [
            {
                "id": L.id,
                "type": L.type,
                "perm": list(L.perm),
                "isotropy": L.isotropy_order,
                "I_p": L.I_p.debug_strings(),
                "I_l": L.I_l.debug_strings(),
                "O_f1": L.O_f1.debug_strings(),
                "O_f2": L.O_f2.debug_strings(),
            }
            for L in fixlines_N()
        ],
        "M02": [f.record().to_json() for f in build_M02_fixpoints()],
        "M11": [dict(f.record().to_json(), kind=f.kind) for f in build_M11_fixpoints()],
    }
