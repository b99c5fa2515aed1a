"""Finite graded rings with an integration functional, and Chern classes of
bundles built functorially from others (splitting principle).

Two kinds of rings are provided. ``GradedRing`` is a monomial quotient ring
given by nilpotency of some generators and one top-down rewrite rule for the
others (this covers projective bundles over P^2 x P^2). ``PairingRing``
describes a ring by a basis of polynomials in characteristic classes and an
integration table for top-degree monomials; products are recovered from
Poincare duality.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, Mapping, Sequence

from .exact_algebra import rat

Monomial = tuple[int, ...]


# ---------------------------------------------------------------- multivariate polynomials


class MPoly:
    """Sparse polynomial over Q in a fixed number of variables."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Monomial, Fraction] | None = None):
        self.n = n
        self.terms = {m: rat(a) for m, a in (terms or {}).items() if a}

    @classmethod
    def var(cls, n: int, i: int) -> "MPoly":
        e = [0] * n
        e[i] = 1
        return cls(n, {tuple(e): Fraction(1)})

    @classmethod
    def const(cls, n: int, a) -> "MPoly":
        return cls(n, {(0,) * n: rat(a)})

    def __add__(self, other) -> "MPoly":
        other = other if isinstance(other, MPoly) else MPoly.const(self.n, other)
        acc = dict(self.terms)
        for m, a in other.terms.items():
            acc[m] = acc.get(m, Fraction(0)) + a
        return MPoly(self.n, acc)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly(self.n, {m: -a for m, a in self.terms.items()})

    def __sub__(self, other) -> "MPoly":
        other = other if isinstance(other, MPoly) else MPoly.const(self.n, other)
        return self + (-other)

    def __mul__(self, other) -> "MPoly":
        if not isinstance(other, MPoly):
            a = rat(other)
            return MPoly(self.n, {m: c * a for m, c in self.terms.items()})
        acc: dict[Monomial, Fraction] = {}
        for m1, a in self.terms.items():
            for m2, b in other.terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                acc[m] = acc.get(m, Fraction(0)) + a * b
        return MPoly(self.n, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MPoly":
        out = MPoly.const(self.n, 1)
        for _ in range(k):
            out = out * self
        return out

    def truncate(self, weights: Sequence[int], top: int) -> "MPoly":
        return MPoly(self.n, {m: a for m, a in self.terms.items() if _wdeg(m, weights) <= top})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, MPoly) and self.terms == other.terms

    def __repr__(self) -> str:
        return f"MPoly({self.terms})"


def _wdeg(m: Monomial, weights: Sequence[int]) -> int:
    return sum(e * w for e, w in zip(m, weights))


def elementary_symmetric(nvars: int, offset: int, count: int, k: int) -> MPoly:
    """e_k in the variables offset .. offset+count-1 of an nvars-variable ring."""
    out = MPoly(nvars)
    from itertools import combinations

    for combo in combinations(range(offset, offset + count), k):
        e = [0] * nvars
        for i in combo:
            e[i] = 1
        out = out + MPoly(nvars, {tuple(e): Fraction(1)})
    return out


def symmetric_reduce(p: MPoly, ranks: Sequence[int]) -> dict[Monomial, Fraction]:
    """Write p, symmetric in each consecutive block of root variables, as a
    polynomial in the blockwise elementary symmetric functions.

    Returns a map from exponent tuples (e_1..e_r of block 1, then block 2,
    ...) to coefficients.
    """
    n = sum(ranks)
    if p.n != n:
        raise ValueError("variable count does not match the blocks")
    offsets = [sum(ranks[:i]) for i in range(len(ranks))]
    cache: dict[tuple[int, int], MPoly] = {}

    def e(block: int, k: int) -> MPoly:
        key = (block, k)
        if key not in cache:
            cache[key] = elementary_symmetric(n, offsets[block], ranks[block], k)
        return cache[key]

    out: dict[Monomial, Fraction] = {}
    rest = MPoly(n, dict(p.terms))
    while rest.terms:
        lead = max(rest.terms)
        c = rest.terms[lead]
        target = MPoly.const(n, 1)
        exps: list[int] = []
        for b, r in enumerate(ranks):
            a = lead[offsets[b] : offsets[b] + r]
            for k in range(r):
                nxt = a[k + 1] if k + 1 < r else 0
                d = a[k] - nxt
                if d < 0:
                    raise ValueError("polynomial is not symmetric in its root blocks")
                exps.append(d)
                if d:
                    target = target * e(b, k + 1) ** d
        out[tuple(exps)] = out.get(tuple(exps), Fraction(0)) + c
        rest = rest - target * c
    return out


# ---------------------------------------------------------------- rings and classes


class ChowClass:
    """An element of a graded ring, stored on the ring's basis."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs: Mapping | None = None):
        self.ring = ring
        self.coeffs = {m: rat(a) for m, a in (coeffs or {}).items() if a}

    def _check(self, other) -> "ChowClass":
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        if other.ring is not self.ring:
            raise ValueError("classes live in different rings")
        return other

    def __add__(self, other) -> "ChowClass":
        other = self._check(other)
        acc = dict(self.coeffs)
        for m, a in other.coeffs.items():
            acc[m] = acc.get(m, Fraction(0)) + a
        return ChowClass(self.ring, acc)

    __radd__ = __add__

    def __neg__(self) -> "ChowClass":
        return ChowClass(self.ring, {m: -a for m, a in self.coeffs.items()})

    def __sub__(self, other) -> "ChowClass":
        return self + (-self._check(other))

    def __rsub__(self, other) -> "ChowClass":
        return self._check(other) - self

    def __mul__(self, other) -> "ChowClass":
        if isinstance(other, (int, Fraction)):
            return ChowClass(self.ring, {m: a * other for m, a in self.coeffs.items()})
        return ring_reduce_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "ChowClass":
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        return isinstance(other, ChowClass) and other.ring is self.ring and self.coeffs == other.coeffs

    def is_zero(self) -> bool:
        return not self.coeffs

    def component(self, d: int) -> "ChowClass":
        return ChowClass(self.ring, {m: a for m, a in self.coeffs.items() if self.ring.degree_of(m) == d})

    def degrees(self) -> set[int]:
        return {self.ring.degree_of(m) for m in self.coeffs}

    def integrate(self) -> Fraction:
        return self.ring.integrate(self)

    def __repr__(self) -> str:
        return f"ChowClass({self.ring.format(self)})"


def ring_reduce_mul(a: ChowClass, b: ChowClass) -> ChowClass:
    if a.ring is not b.ring:
        raise ValueError("classes live in different rings")
    return a.ring.mul(a, b)


def integrate(a: ChowClass) -> Fraction:
    return a.ring.integrate(a)


class GradedRing:
    """Q[g_1..g_n] modulo g_i^{n_i} = 0 for nilpotent generators and one rule
    g^r = (lower powers of g) for the remaining generators.

    ``rules`` maps a generator index to (r, replacement), replacement being a
    mapping from monomials (already reduced in the other generators) to
    coefficients. ``integration`` assigns values to top-degree basis
    monomials; missing ones integrate to 0.
    """

    def __init__(
        self,
        names: Sequence[str],
        degrees: Sequence[int],
        nilpotent: Mapping[int, int],
        rules: Mapping[int, tuple[int, Mapping[Monomial, Fraction]]],
        top_degree: int,
        integration: Mapping[Monomial, Fraction],
    ):
        self.names = tuple(names)
        self.degrees = tuple(degrees)
        self.n = len(names)
        self.nilpotent = dict(nilpotent)
        self.rules = {i: (r, {tuple(m): rat(a) for m, a in rep.items()}) for i, (r, rep) in rules.items()}
        self.top_degree = top_degree
        self.integration = {tuple(m): rat(a) for m, a in integration.items()}
        bounds = []
        for i in range(self.n):
            if i in self.nilpotent:
                bounds.append(self.nilpotent[i])
            elif i in self.rules:
                bounds.append(self.rules[i][0])
            else:
                raise ValueError(f"generator {names[i]} has no relation")
        self.bounds = tuple(bounds)
        self.basis = tuple(
            sorted(
                (m for m in product(*(range(b) for b in bounds)) if self.degree_of(m) <= top_degree),
                key=lambda m: (self.degree_of(m), m),
            )
        )
        self._basis_set = frozenset(self.basis)
        self._mono_cache: dict[Monomial, dict[Monomial, Fraction]] = {}

    def degree_of(self, m: Monomial) -> int:
        return _wdeg(m, self.degrees)

    def basis_in_degree(self, d: int) -> list[Monomial]:
        return [m for m in self.basis if self.degree_of(m) == d]

    def one(self) -> ChowClass:
        return ChowClass(self, {(0,) * self.n: Fraction(1)})

    def const(self, a) -> ChowClass:
        return self.one() * rat(a)

    def gen(self, name: str) -> ChowClass:
        i = self.names.index(name)
        return self.monomial(tuple(1 if j == i else 0 for j in range(self.n)))

    def monomial(self, m: Monomial) -> ChowClass:
        return ChowClass(self, self._reduce_monomial(tuple(m)))

    def _reduce_monomial(self, m: Monomial) -> dict[Monomial, Fraction]:
        if m in self._mono_cache:
            return self._mono_cache[m]
        if self.degree_of(m) > self.top_degree:
            out: dict[Monomial, Fraction] = {}
        elif m in self._basis_set:
            out = {m: Fraction(1)}
        else:
            out = {}
            i = next(j for j in range(self.n) if m[j] >= self.bounds[j])
            if i in self.nilpotent:
                pass
            else:
                r, rep = self.rules[i]
                rest = list(m)
                rest[i] -= r
                for mm, a in rep.items():
                    prod_m = tuple(x + y for x, y in zip(rest, mm))
                    for b, c in self._reduce_monomial(prod_m).items():
                        out[b] = out.get(b, Fraction(0)) + a * c
                out = {b: c for b, c in out.items() if c}
        self._mono_cache[m] = out
        return out

    def from_terms(self, terms: Mapping[Monomial, Fraction]) -> ChowClass:
        acc: dict[Monomial, Fraction] = {}
        for m, a in terms.items():
            for b, c in self._reduce_monomial(tuple(m)).items():
                acc[b] = acc.get(b, Fraction(0)) + rat(a) * c
        return ChowClass(self, acc)

    def mul(self, a: ChowClass, b: ChowClass) -> ChowClass:
        acc: dict[Monomial, Fraction] = {}
        for m1, x in a.coeffs.items():
            for m2, y in b.coeffs.items():
                if self.degree_of(m1) + self.degree_of(m2) > self.top_degree:
                    continue
                prod_m = tuple(u + v for u, v in zip(m1, m2))
                for m, c in self._reduce_monomial(prod_m).items():
                    acc[m] = acc.get(m, Fraction(0)) + x * y * c
        return ChowClass(self, acc)

    def integrate(self, a: ChowClass) -> Fraction:
        return sum((c * self.integration.get(m, Fraction(0)) for m, c in a.coeffs.items()), Fraction(0))

    def lift(self, a: ChowClass) -> ChowClass:
        """Embed a class of a ring whose generators are a prefix of ours."""
        pad = (0,) * (self.n - a.ring.n)
        return self.from_terms({m + pad: c for m, c in a.coeffs.items()})

    def format(self, a: ChowClass) -> str:
        parts = []
        for m, c in sorted(a.coeffs.items(), key=lambda x: (self.degree_of(x[0]), x[0])):
            mono = "*".join(f"{n}^{e}" if e > 1 else n for n, e in zip(self.names, m) if e)
            parts.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts) or "0"


def projective_bundle_ring(
    base: GradedRing,
    var: str,
    chern_of_bundle: Sequence[ChowClass],
    integration_base: Monomial,
) -> GradedRing:
    """A*(P(W)) over ``base`` for W of rank r with Chern classes c_1..c_r,
    using the relation sum_i (-1)^i c_i(W) x^{r-i} = 0 for x = c_1(O(1)).

    The top monomial (integration_base, x^{r-1}) integrates to 1.
    """
    r = len(chern_of_bundle)
    n = base.n + 1
    replacement: dict[Monomial, Fraction] = {}
    # x^r = sum_{i=1}^r (-1)^{i+1} c_i x^{r-i}
    for i, ci in enumerate(chern_of_bundle, start=1):
        for m, a in ci.coeffs.items():
            key = m + (r - i,)
            replacement[key] = replacement.get(key, Fraction(0)) + (-1) ** (i + 1) * a
    top = base.top_degree + (r - 1)
    return GradedRing(
        base.names + (var,),
        base.degrees + (1,),
        base.nilpotent,
        {base.n: (r, replacement), **base.rules},
        top,
        {tuple(integration_base) + (r - 1,): Fraction(1)},
    )


def p2_times_p2(names: tuple[str, str] = ("tau", "taucheck")) -> GradedRing:
    return GradedRing(names, (1, 1), {0: 3, 1: 3}, {}, 4, {(2, 2): 1})


class PairingRing:
    """A ring given by a basis of polynomials in characteristic classes and
    the integrals of all top-degree monomials.

    ``class_degrees`` are the degrees of the underlying variables,
    ``basis_polys`` expresses each basis element as an MPoly in them and
    ``top_values`` maps top-degree monomials to their integrals.
    """

    def __init__(
        self,
        var_names: Sequence[str],
        class_degrees: Sequence[int],
        basis_names: Sequence[str],
        basis_polys: Sequence[MPoly],
        top_degree: int,
        top_values: Mapping[Monomial, Fraction],
    ):
        self.var_names = tuple(var_names)
        self.class_degrees = tuple(class_degrees)
        self.names = tuple(basis_names)
        self.polys = tuple(basis_polys)
        self.top_degree = top_degree
        self.top_values = {tuple(m): rat(a) for m, a in top_values.items()}
        self.basis_degrees = tuple(self._poly_degree(p) for p in self.polys)
        self.size = len(self.polys)
        self.pairing = [[self.integrate_poly(a * b) for b in self.polys] for a in self.polys]
        self.inverse_pairing = _invert(self.pairing)
        self._prod: dict[tuple[int, int], dict[int, Fraction]] = {}

    def _poly_degree(self, p: MPoly) -> int:
        degs = {_wdeg(m, self.class_degrees) for m in p.terms}
        if len(degs) != 1:
            raise ValueError("basis polynomials must be homogeneous")
        return degs.pop()

    def degree_of(self, i: int) -> int:
        return self.basis_degrees[i]

    def integrate_poly(self, p: MPoly) -> Fraction:
        total = Fraction(0)
        for m, a in p.terms.items():
            if _wdeg(m, self.class_degrees) == self.top_degree:
                if m not in self.top_values:
                    raise KeyError(f"no integration value for monomial {m}")
                total += a * self.top_values[m]
        return total

    def from_poly(self, p: MPoly) -> ChowClass:
        """Project a polynomial in the classes onto the basis via the pairing."""
        ints = [self.integrate_poly(p * b) for b in self.polys]
        coeffs = {}
        for c in range(self.size):
            v = sum((ints[d] * self.inverse_pairing[d][c] for d in range(self.size)), Fraction(0))
            if v:
                coeffs[c] = v
        return ChowClass(self, coeffs)

    def basis_class(self, i: int) -> ChowClass:
        return ChowClass(self, {i: Fraction(1)})

    def one(self) -> ChowClass:
        deg0 = [i for i in range(self.size) if self.basis_degrees[i] == 0]
        return self.from_poly(MPoly.const(len(self.var_names), 1)) if deg0 else ChowClass(self)

    def const(self, a) -> ChowClass:
        return self.one() * rat(a)

    def _basis_product(self, i: int, j: int) -> dict[int, Fraction]:
        key = (min(i, j), max(i, j))
        if key not in self._prod:
            self._prod[key] = dict(self.from_poly(self.polys[i] * self.polys[j]).coeffs)
        return self._prod[key]

    def mul(self, a: ChowClass, b: ChowClass) -> ChowClass:
        acc: dict[int, Fraction] = {}
        for i, x in a.coeffs.items():
            for j, y in b.coeffs.items():
                for k, c in self._basis_product(i, j).items():
                    acc[k] = acc.get(k, Fraction(0)) + x * y * c
        return ChowClass(self, acc)

    def integrate(self, a: ChowClass) -> Fraction:
        return sum((c * self.pairing[0][i] for i, c in a.coeffs.items()), Fraction(0)) if self._has_unit() else Fraction(0)

    def _has_unit(self) -> bool:
        return self.basis_degrees[0] == 0

    def format(self, a: ChowClass) -> str:
        return " + ".join(f"{c}*{self.names[i]}" for i, c in sorted(a.coeffs.items())) or "0"


def _invert(m: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    n = len(m)
    a = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("pairing matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


# ---------------------------------------------------------------- total Chern classes


class TotalChernClass:
    """c = 1 + c_1 + c_2 + ... in a graded ring; components beyond the top
    degree of the ring are dropped."""

    __slots__ = ("ring", "rank", "comps")

    def __init__(self, ring, rank: int, comps: Sequence[ChowClass]):
        self.ring = ring
        self.rank = rank
        top = ring.top_degree
        cs = list(comps)[: top + 1]
        cs += [ChowClass(ring)] * (top + 1 - len(cs))
        if cs[0] != ring.one():
            raise ValueError("c_0 must be 1")
        self.comps = tuple(cs)

    @classmethod
    def of_classes(cls, ring, classes: Sequence[ChowClass]) -> "TotalChernClass":
        return cls(ring, len(classes), [ring.one()] + list(classes))

    @classmethod
    def line(cls, c1: ChowClass) -> "TotalChernClass":
        return cls(c1.ring, 1, [c1.ring.one(), c1])

    @classmethod
    def trivial(cls, ring, rank: int = 0) -> "TotalChernClass":
        return cls(ring, rank, [ring.one()])

    def __getitem__(self, i: int) -> ChowClass:
        if 0 <= i < len(self.comps):
            return self.comps[i]
        return ChowClass(self.ring)

    def total(self) -> ChowClass:
        out = ChowClass(self.ring)
        for c in self.comps:
            out = out + c
        return out

    def __mul__(self, other: "TotalChernClass") -> "TotalChernClass":
        """Whitney sum."""
        top = self.ring.top_degree
        comps = []
        for k in range(top + 1):
            acc = ChowClass(self.ring)
            for i in range(k + 1):
                acc = acc + self[i] * other[k - i]
            comps.append(acc)
        return TotalChernClass(self.ring, self.rank + other.rank, comps)

    def inverse(self) -> "TotalChernClass":
        """Class of the negative of the bundle (a truncated inverse)."""
        top = self.ring.top_degree
        inv = [self.ring.one()]
        for k in range(1, top + 1):
            acc = ChowClass(self.ring)
            for i in range(1, k + 1):
                acc = acc + self[i] * inv[k - i]
            inv.append(-acc)
        return TotalChernClass(self.ring, -self.rank, inv)

    def __truediv__(self, other: "TotalChernClass") -> "TotalChernClass":
        return self * other.inverse()

    def is_honest(self) -> bool:
        return all(self[i].is_zero() for i in range(max(self.rank, 0) + 1, len(self.comps)))

    def classes(self) -> list[ChowClass]:
        return [self[i] for i in range(1, self.rank + 1)]


# functors on formal roots: each receives one list of root MPolys per input
# bundle and returns the roots of the output bundle.

RootFunctor = Callable[[list[list[MPoly]]], list[MPoly]]


def _dual(roots):
    return [-x for x in roots[0]]


def _tensor(roots):
    return [x + y for x in roots[0] for y in roots[1]]


def _sym2(roots):
    r = roots[0]
    return [r[i] + r[j] for i in range(len(r)) for j in range(i, len(r))]


def _wedge2(roots):
    r = roots[0]
    return [r[i] + r[j] for i in range(len(r)) for j in range(i + 1, len(r))]


def _sym_d(d):
    def f(roots):
        a, b = roots[0]
        return [a * i + b * (d - i) for i in range(d + 1)]

    return f


@lru_cache(maxsize=None)
def _universal(functor_key: tuple, ranks: tuple[int, ...], top: int) -> tuple[dict, ...]:
    """c_k of the functor as polynomials in the input Chern classes, for
    k = 0..top."""
    fn = _FUNCTORS[functor_key[0]] if len(functor_key) == 1 else _sym_d(functor_key[1])
    n = sum(ranks)
    roots, off = [], 0
    for r in ranks:
        roots.append([MPoly.var(n, off + i) for i in range(r)])
        off += r
    out_roots = fn(roots)
    weights = [1] * n
    total = MPoly.const(n, 1)
    for x in out_roots:
        total = (total * (x + 1)).truncate(weights, top)
    comps = []
    for k in range(top + 1):
        part = MPoly(n, {m: a for m, a in total.terms.items() if sum(m) == k})
        comps.append(symmetric_reduce(part, list(ranks)))
    return tuple(comps)


_FUNCTORS: dict[str, RootFunctor] = {
    "dual": _dual,
    "tensor": _tensor,
    "sym2": _sym2,
    "wedge2": _wedge2,
}

_RANK_LIMITS = {"sym2": 3, "wedge2": 4}


def chern_functor(functor: str | tuple, *inputs: TotalChernClass) -> TotalChernClass:
    """Total Chern class of dual / tensor / sym2 / wedge2 / ("sym", d)
    applied to bundles with the given total classes.

    Inputs must be honest bundles (no classes above their rank).
    """
    key = (functor,) if isinstance(functor, str) else tuple(functor)
    ring = inputs[0].ring
    ranks = tuple(c.rank for c in inputs)
    if key[0] == "sym":
        if ranks != (2,) or not 1 <= key[1] <= 4:
            raise ValueError("Sym_d is implemented for rank 2 and d <= 4")
        out_rank = key[1] + 1
    elif key[0] in ("dual", "sym2", "wedge2"):
        if len(ranks) != 1:
            raise ValueError(f"{key[0]} takes one bundle")
        r = ranks[0]
        if key[0] in _RANK_LIMITS and r > _RANK_LIMITS[key[0]]:
            raise ValueError(f"{key[0]} is implemented for rank <= {_RANK_LIMITS[key[0]]}")
        out_rank = {"dual": r, "sym2": r * (r + 1) // 2, "wedge2": r * (r - 1) // 2}[key[0]]
    elif key[0] == "tensor":
        if len(ranks) != 2:
            raise ValueError("tensor takes two bundles")
        out_rank = ranks[0] * ranks[1]
    else:
        raise ValueError(f"unknown functor {functor}")
    for c in inputs:
        if c.rank < 0 or not c.is_honest():
            raise ValueError("functors need honest bundles")
    top = min(ring.top_degree, out_rank)
    universal = _universal(key, ranks, top)
    classes = []
    for c in inputs:
        classes.extend(c[i] for i in range(1, c.rank + 1))
    comps = []
    for poly in universal:
        acc = ChowClass(ring)
        for m, a in poly.items():
            term = ring.const(a)
            for cls_, e in zip(classes, m):
                if e:
                    term = term * cls_**e
            acc = acc + term
        comps.append(acc)
    return TotalChernClass(ring, out_rank, comps)


def dual(c: TotalChernClass) -> TotalChernClass:
    return chern_functor("dual", c)


def tensor_line(c: TotalChernClass, line_c1: ChowClass) -> TotalChernClass:
    return chern_functor("tensor", c, TotalChernClass.line(line_c1))


def sym2(c: TotalChernClass) -> TotalChernClass:
    return chern_functor("sym2", c)


def sym_d(c: TotalChernClass, d: int) -> TotalChernClass:
    return chern_functor(("sym", d), c)


def wedge2(c: TotalChernClass) -> TotalChernClass:
    return chern_functor("wedge2", c)


# ---------------------------------------------------------------- A*(N)

# variables: gamma1, gamma2, gamma3, delta2 (degrees 1, 2, 3, 2)
N_CLASS_NAMES = ("gamma1", "gamma2", "gamma3", "delta2")
N_CLASS_DEGREES = (1, 2, 3, 2)

# exponents of (gamma1, gamma2, gamma3, delta2) and scalar for T0..T12
N_BASIS: tuple[tuple[Monomial, Fraction], ...] = (
    ((0, 0, 0, 0), Fraction(1)),
    ((1, 0, 0, 0), Fraction(1)),
    ((2, 0, 0, 0), Fraction(1)),
    ((0, 1, 0, 0), Fraction(1)),
    ((0, 0, 0, 1), Fraction(1)),
    ((3, 0, 0, 0), Fraction(1)),
    ((1, 1, 0, 0), Fraction(1)),
    ((1, 0, 0, 1), Fraction(1)),
    ((4, 0, 0, 0), Fraction(1)),
    ((2, 1, 0, 0), Fraction(1)),
    ((2, 0, 0, 1), Fraction(1)),
    ((5, 0, 0, 0), Fraction(1, 57)),
    ((6, 0, 0, 0), Fraction(1, 57)),
)


def degree6_monomials() -> list[Monomial]:
    """All monomials of degree 6 in gamma1, gamma2, gamma3, delta2."""
    out = []
    for m in product(range(7), range(4), range(3), range(4)):
        if _wdeg(m, N_CLASS_DEGREES) == 6:
            out.append(m)
    return sorted(out, reverse=True)


def chow_ring_N(top_values: Mapping[Monomial, Fraction]) -> PairingRing:
    """A*(N) with basis T0..T12, from the integrals of degree-6 monomials."""
    polys = [MPoly(4, {m: c}) for m, c in N_BASIS]
    return PairingRing(
        N_CLASS_NAMES,
        N_CLASS_DEGREES,
        tuple(f"T{i}" for i in range(13)),
        polys,
        6,
        top_values,
    )


def claim_relations():
    """Coordinates of r0, r1, r2 on the module basis e1^i e2^j f1^k
    (i <= 2, j, k <= 1) of Q[e1,e2,e3,f1,f2] over its symmetric part.

    Returns a list of MPoly in (gamma1, gamma2, gamma3, delta1, delta2),
    where gamma_i = c_i(E) = e_i(e) and delta_i = e_i(f), unsigned.
    """
    # variables: e1 e2 f1 g1 g2 g3 d1 d2
    n = 8
    e1, e2, f1, g1, g2, g3, d1, d2 = (MPoly.var(n, i) for i in range(n))
    e3 = g1 - e1 - e2
    f2 = d1 - f1
    r0 = e1 + e2 + e3 - f1 - f2
    r1 = (e1 - f1) ** 3 * (e1 - f2) ** 3
    r2 = (e1 - f2) ** 3 * (e2 - f2) ** 3
    out = []
    for r in (r0, r1, r2):
        out.extend(_module_coordinates(r, n))
    return out


def _module_coordinates(p: MPoly, n: int) -> list[MPoly]:
    """Reduce p in (e1, e2, f1 | symmetric coefficients) to the basis."""
    # e2^2 = (g1 - e1) e2 - (e1^2 - g1 e1 + g2)
    # e1^3 = g1 e1^2 - g2 e1 + g3
    # f1^2 = d1 f1 - d2
    e1, e2, f1, g1, g2, g3, d1, d2 = (MPoly.var(n, i) for i in range(n))
    rules = {
        1: (2, (g1 - e1) * e2 - (e1 * e1 - g1 * e1 + g2)),
        0: (3, g1 * e1 * e1 - g2 * e1 + g3),
        2: (2, d1 * f1 - d2),
    }
    todo = dict(p.terms)
    done: dict[Monomial, Fraction] = {}
    while todo:
        m, a = todo.popitem()
        hit = next((i for i in (1, 0, 2) if m[i] >= rules[i][0]), None)
        if hit is None:
            done[m] = done.get(m, Fraction(0)) + a
            continue
        r, rep = rules[hit]
        rest = list(m)
        rest[hit] -= r
        for mm, b in rep.terms.items():
            k = tuple(x + y for x, y in zip(rest, mm))
            todo[k] = todo.get(k, Fraction(0)) + a * b
            if todo[k] == 0:
                del todo[k]
    coords: dict[tuple[int, int, int], dict] = {}
    for m, a in done.items():
        if a:
            coords.setdefault(m[:3], {})
            key = (0, 0, 0) + m[3:]
            coords[m[:3]][key] = coords[m[:3]].get(key, Fraction(0)) + a
    out = []
    for b in sorted(coords):
        q = MPoly(n, coords[b])
        if not q.is_zero():
            out.append(MPoly(5, {m[3:]: c for m, c in q.terms.items()}))
    return out
