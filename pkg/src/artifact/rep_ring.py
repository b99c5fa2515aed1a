"""Representation ring of the torus T = (C*)^3.

A character is lambda_0^a lambda_1^b lambda_2^c with rational exponents
(half-integers appear for double covers). A VirtualRep is a finite integer
combination of characters.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Iterator, Mapping, Sequence

from .exact_algebra import rat, rat_to_str

Character = tuple  # three exponents, int or Fraction

TRIVIAL: Character = (0, 0, 0)


def _exp(a):
    """Exponents are stored as int when integral (cheap hashing), else Fraction."""
    if type(a) is int:
        return a
    a = rat(a)
    return a.numerator if a.denominator == 1 else a


def character(a=0, b=0, c=0) -> Character:
    return (_exp(a), _exp(b), _exp(c))


def char_mul(x: Character, y: Character) -> Character:
    return (_exp(x[0] + y[0]), _exp(x[1] + y[1]), _exp(x[2] + y[2]))


def char_pow(x: Character, k) -> Character:
    if type(k) is not int:
        k = _exp(k)
    return (_exp(x[0] * k), _exp(x[1] * k), _exp(x[2] * k))


def char_weight(x: Character, omega: Sequence) -> Fraction:
    return x[0] * omega[0] + x[1] * omega[1] + x[2] * omega[2]


def char_permute(x: Character, perm: Sequence[int]) -> Character:
    """Relabel lambda_i -> lambda_perm[i]."""
    out = [0, 0, 0]
    for i in range(3):
        out[perm[i]] = x[i]
    return tuple(out)


def char_str(x: Character) -> str:
    parts = []
    for i, a in enumerate(x):
        if a == 1:
            parts.append(f"λ{i}")
        elif a:
            parts.append(f"λ{i}^{rat_to_str(a)}")
    return "".join(parts) or "1"


class VirtualRep:
    """Immutable integer combination of torus characters."""

    __slots__ = ("_terms", "_key")

    def __init__(self, terms: Mapping[Character, int] | Iterable[Character] = ()):
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = Counter(terms).items()
        acc: dict[Character, int] = {}
        for ch, m in items:
            ch = (_exp(ch[0]), _exp(ch[1]), _exp(ch[2]))
            acc[ch] = acc.get(ch, 0) + int(m)
        self._terms = {ch: m for ch, m in acc.items() if m}
        self._key = tuple(sorted(self._terms.items()))

    # construction helpers
    @classmethod
    def of(cls, *chars: Character) -> "VirtualRep":
        return cls(chars)

    @classmethod
    def one(cls) -> "VirtualRep":
        return cls([TRIVIAL])

    @property
    def terms(self) -> dict[Character, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Character, int]]:
        return iter(self._key)

    @property
    def rank(self) -> int:
        return sum(self._terms.values())

    def is_effective(self) -> bool:
        return all(m > 0 for m in self._terms.values())

    def characters(self) -> list[Character]:
        """Characters listed with multiplicity (effective reps only)."""
        if not self.is_effective():
            raise ValueError("virtual rep has no underlying character list")
        return [ch for ch, m in self._key for _ in range(m)]

    def multiplicity(self, ch: Character) -> int:
        return self._terms.get(character(*ch), 0)

    def __eq__(self, other) -> bool:
        return isinstance(other, VirtualRep) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __add__(self, other) -> "VirtualRep":
        other = _as_rep(other)
        acc = dict(self._terms)
        for ch, m in other._terms.items():
            acc[ch] = acc.get(ch, 0) + m
        return VirtualRep(acc)

    __radd__ = __add__

    def __neg__(self) -> "VirtualRep":
        return VirtualRep({ch: -m for ch, m in self._terms.items()})

    def __sub__(self, other) -> "VirtualRep":
        return self + (-_as_rep(other))

    def __rsub__(self, other) -> "VirtualRep":
        return _as_rep(other) - self

    def __mul__(self, other) -> "VirtualRep":
        if isinstance(other, int):
            return VirtualRep({ch: m * other for ch, m in self._terms.items()})
        other = _as_rep(other)
        acc: dict[Character, int] = {}
        for x, m in self._terms.items():
            for y, n in other._terms.items():
                z = char_mul(x, y)
                acc[z] = acc.get(z, 0) + m * n
        return VirtualRep(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "VirtualRep":
        """Tensor power (n >= 0); use power_k for the Adams-type rescaling."""
        out = VirtualRep.one()
        for _ in range(n):
            out = out * self
        return out

    def power_k(self, k) -> "VirtualRep":
        """[U]^(k): every character raised to the k-th power."""
        return VirtualRep({char_pow(ch, k): m for ch, m in self._terms.items()})

    def dual(self) -> "VirtualRep":
        return self.power_k(-1)

    def sym(self, n: int) -> "VirtualRep":
        chars = self.characters()
        out: Counter = Counter()
        for combo in combinations_with_replacement(range(len(chars)), n):
            ch = TRIVIAL
            for i in combo:
                ch = char_mul(ch, chars[i])
            out[ch] += 1
        return VirtualRep(out)

    def wedge(self, n: int) -> "VirtualRep":
        chars = self.characters()
        out: Counter = Counter()
        for combo in combinations(range(len(chars)), n):
            ch = TRIVIAL
            for i in combo:
                ch = char_mul(ch, chars[i])
            out[ch] += 1
        return VirtualRep(out)

    def wedge2(self) -> "VirtualRep":
        return self.wedge(2)

    def det(self) -> "VirtualRep":
        """Top exterior power; defined for virtual reps as a character."""
        ch = TRIVIAL
        for x, m in self._terms.items():
            ch = char_mul(ch, char_pow(x, m))
        return VirtualRep([ch])

    def permute(self, perm: Sequence[int]) -> "VirtualRep":
        return VirtualRep({char_permute(ch, perm): m for ch, m in self._terms.items()})

    def weights(self, omega: Sequence) -> list[tuple[Fraction, int]]:
        """Weights a0*w0 + a1*w1 + a2*w2 with signed multiplicities."""
        acc: dict[Fraction, int] = {}
        for ch, m in self._terms.items():
            w = char_weight(ch, omega)
            acc[w] = acc.get(w, 0) + m
        return sorted((w, m) for w, m in acc.items() if m)

    def weight_list(self, omega: Sequence) -> list[Fraction]:
        """Weights with multiplicity of an effective rep."""
        return [char_weight(ch, omega) for ch in self.characters()]

    def debug_strings(self) -> list[str]:
        return [f"{m} × {char_str(ch)}" for ch, m in self._key]

    def __repr__(self) -> str:
        return "VirtualRep(" + " + ".join(self.debug_strings()) + ")"


def _as_rep(x) -> VirtualRep:
    if isinstance(x, VirtualRep):
        return x
    if isinstance(x, int):
        return VirtualRep({TRIVIAL: x})
    raise TypeError(f"cannot combine VirtualRep with {type(x).__name__}")


def rep_mul(u: VirtualRep, v: VirtualRep) -> VirtualRep:
    return u * v


def rep_power_k(u: VirtualRep, k) -> VirtualRep:
    return u.power_k(k)


def rep_sym(u: VirtualRep, n: int) -> VirtualRep:
    return u.sym(n)


def rep_wedge2(u: VirtualRep) -> VirtualRep:
    return u.wedge2()


def weights_of(u: VirtualRep, omega: Sequence) -> list[tuple[Fraction, int]]:
    return u.weights(omega)


def lam(i: int, power=1) -> VirtualRep:
    """The one-dimensional rep lambda_i^power."""
    e = [0, 0, 0]
    e[i] = power
    return VirtualRep([character(*e)])


def mono(a=0, b=0, c=0) -> VirtualRep:
    return VirtualRep([character(a, b, c)])


V_STD = lam(0) + lam(1) + lam(2)
