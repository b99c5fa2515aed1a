"""Exact rationals, dense polynomials, truncated q-series and linear algebra
over the rational function field Q(q).

Everything here is exact. Values are immutable after construction.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

Rational = Fraction

DEFAULT_ORDER = 12


def rat(x) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot make an exact rational from {type(x).__name__}")


def rat_to_str(x) -> str:
    x = rat(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------- polynomials


class Poly:
    """Dense univariate polynomial with rational coefficients.

    ``coeffs[i]`` is the coefficient of ``x**i``. Trailing zeros are trimmed,
    so the zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    ZERO_DEGREE = -1

    def __init__(self, coeffs: Iterable = ()):
        c = [rat(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def const(cls, a) -> "Poly":
        return cls([a])

    @classmethod
    def monomial(cls, n: int, a=1) -> "Poly":
        return cls([0] * n + [a])

    @classmethod
    def from_roots(cls, roots: Iterable) -> "Poly":
        out = cls([1])
        for r in roots:
            out = out * cls([-rat(r), 1])
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-a for a in self.coeffs)

    def __sub__(self, other) -> "Poly":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "Poly":
        return _as_poly(other) - self

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly(a * other for a in self.coeffs)
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        out = Poly([1])
        for _ in range(n):
            out = out * self
        return out

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, Poly) else Poly()
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def derivative(self) -> "Poly":
        return Poly(i * a for i, a in enumerate(self.coeffs) if i > 0)

    def shift(self, a) -> "Poly":
        """The polynomial x -> self(x + a)."""
        return self(Poly([a, 1]))

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(), self
        quot = [Fraction(0)] * (dq + 1)
        lc = other.lead()
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] / lc
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Poly(quot), Poly(rem)

    def __floordiv__(self, other) -> "Poly":
        return self.divmod(_as_poly(other))[0]

    def __mod__(self, other) -> "Poly":
        return self.divmod(_as_poly(other))[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("polynomial division is not exact")
        return q

    def monic(self) -> "Poly":
        return self * (1 / self.lead()) if self.coeffs else self

    def content(self) -> Fraction:
        """Positive rational c with self/c integral and primitive."""
        if not self.coeffs:
            return Fraction(0)
        num = reduce(gcd, (a.numerator for a in self.coeffs))
        den = reduce(lcm, (a.denominator for a in self.coeffs))
        return Fraction(num, den)

    def __repr__(self) -> str:
        return f"Poly({self.to_str()})"

    def to_str(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[i]
            if not a:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if mono and abs(a) == 1:
                s = mono
            else:
                s = rat_to_str(abs(a)) + ("*" + mono if mono else "")
            parts.append(("-" if a < 0 else "+") + s)
        out = "".join(parts)
        return out[1:] if out.startswith("+") else out

    def to_json(self) -> list[str]:
        return [rat_to_str(a) for a in self.coeffs]


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    return Poly.const(x)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (zero if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


# ---------------------------------------------------------------- q-series


class QSeries:
    """Power series in q truncated after ``q**order``.

    A product keeps the smaller truncation order of its operands, and no
    operation reads a coefficient beyond its own order.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable = (), order: int = DEFAULT_ORDER):
        c = [rat(a) for a in coeffs]
        if len(c) > order + 1:
            c = c[: order + 1]
        c.extend([Fraction(0)] * (order + 1 - len(c)))
        self.coeffs: tuple[Fraction, ...] = tuple(c)
        self.order = order

    @classmethod
    def const(cls, a, order: int = DEFAULT_ORDER) -> "QSeries":
        return cls([a], order)

    @classmethod
    def q(cls, order: int = DEFAULT_ORDER) -> "QSeries":
        return cls([0, 1], order)

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n] if 0 <= n <= self.order else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QSeries.const(other, self.order)
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    def __hash__(self) -> int:
        return hash((self.coeffs, self.order))

    def _coerce(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            return other
        return QSeries.const(other, self.order)

    def truncate(self, order: int) -> "QSeries":
        return QSeries(self.coeffs, min(order, self.order))

    def __add__(self, other) -> "QSeries":
        other = self._coerce(other)
        n = min(self.order, other.order)
        return QSeries((self[i] + other[i] for i in range(n + 1)), n)

    __radd__ = __add__

    def __neg__(self) -> "QSeries":
        return QSeries((-a for a in self.coeffs), self.order)

    def __sub__(self, other) -> "QSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "QSeries":
        return self._coerce(other) - self

    def scale(self, a) -> "QSeries":
        a = rat(a)
        return QSeries((a * c for c in self.coeffs), self.order)

    def __mul__(self, other) -> "QSeries":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            if a[i]:
                ai = a[i]
                for j in range(n + 1 - i):
                    if b[j]:
                        out[i + j] += ai * b[j]
        return QSeries(out, n)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QSeries":
        if k < 0:
            return self.inverse() ** (-k)
        out = QSeries.const(1, self.order)
        for _ in range(k):
            out = out * self
        return out

    def inverse(self) -> "QSeries":
        """Multiplicative inverse by long division; needs a nonzero constant."""
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv0 = 1 / a[0]
        out = [inv0]
        for n in range(1, self.order + 1):
            s = sum((a[k] * out[n - k] for k in range(1, n + 1)), Fraction(0))
            out.append(-s * inv0)
        return QSeries(out, self.order)

    def __truediv__(self, other) -> "QSeries":
        if isinstance(other, (int, Fraction)):
            return self.scale(1 / rat(other))
        return self * other.inverse()

    def __rtruediv__(self, other) -> "QSeries":
        return self._coerce(other) * self.inverse()

    def theta(self) -> "QSeries":
        """Apply D = q d/dq."""
        return QSeries((n * a for n, a in enumerate(self.coeffs)), self.order)

    def derivative(self) -> "QSeries":
        """d/dq; the result loses one order of precision."""
        return QSeries((n * a for n, a in enumerate(self.coeffs) if n > 0), self.order - 1)

    def integral(self) -> "QSeries":
        return QSeries([0] + [a / (n + 1) for n, a in enumerate(self.coeffs[:-1])], self.order)

    def exp(self) -> "QSeries":
        """exp of a series with zero constant term, via f' = g' f."""
        if self.coeffs[0] != 0:
            raise ValueError("exp needs a series with zero constant term")
        g = self.theta().coeffs
        f = [Fraction(1)]
        for n in range(1, self.order + 1):
            f.append(sum((g[k] * f[n - k] for k in range(1, n + 1)), Fraction(0)) / n)
        return QSeries(f, self.order)

    def log(self) -> "QSeries":
        """log of a series with constant term 1, via g' = f'/f."""
        if self.coeffs[0] != 1:
            raise ValueError("log needs a series with constant term 1")
        d = (self.theta() * self.inverse()).coeffs
        return QSeries([0] + [d[n] / n for n in range(1, self.order + 1)], self.order)

    def compose(self, inner: "QSeries") -> "QSeries":
        """self(inner(q)); inner must have zero constant term."""
        if inner[0] != 0:
            raise ValueError("inner series must have zero constant term")
        n = min(self.order, inner.order)
        out = QSeries.const(0, n)
        for a in reversed(self.coeffs[: n + 1]):
            out = out * inner + a
        return out

    def reversion(self) -> "QSeries":
        """Compositional inverse v with self(v(q)) = q.

        Solved coefficient by coefficient: the n-th coefficient of
        ``self(v)`` is linear in ``v[n]`` with slope ``self[1]``.
        """
        if self.coeffs[0] != 0:
            raise ValueError("reversion needs zero constant term")
        u1 = self.coeffs[1] if self.order >= 1 else Fraction(0)
        if u1 == 0:
            raise ValueError("reversion needs a nonzero linear coefficient")
        N = self.order
        v = [Fraction(0), 1 / u1] + [Fraction(0)] * (N - 1)
        for n in range(2, N + 1):
            comp = self.compose(QSeries(v[:n], N))
            v[n] = -comp[n] / u1
        return QSeries(v[: N + 1], N)

    def valuation(self) -> int | None:
        for i, a in enumerate(self.coeffs):
            if a:
                return i
        return None

    def __repr__(self) -> str:
        return f"QSeries({Poly(self.coeffs).to_str('q')} + O(q^{self.order + 1}))"

    def to_json(self) -> list[str]:
        return [rat_to_str(a) for a in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "QSeries":
        return cls([Fraction(s) for s in data], len(data) - 1)


def dumps_series(s: QSeries) -> str:
    return json.dumps(s.to_json())


@dataclass(frozen=True)
class LogSolutionTriple:
    """Series psi0, psi1, psi2 standing for the solutions
    psi0, t*psi0 + psi1 and t^2/2*psi0 + t*psi1 + psi2."""

    psi0: QSeries
    psi1: QSeries
    psi2: QSeries

    def __post_init__(self):
        if self.psi0[0] != 1 or self.psi1[0] != 0 or self.psi2[0] != 0:
            raise ValueError("log triple needs psi0(0) = 1 and psi1(0) = psi2(0) = 0")


# ---------------------------------------------------------------- Q(q) linear algebra


class NoDependence(ValueError):
    """Raised when the supplied rows are linearly independent."""


def _entry_to_poly_pair(x) -> tuple[Poly, Poly]:
    if isinstance(x, tuple):
        return _as_poly(x[0]), _as_poly(x[1])
    return _as_poly(x), Poly([1])


def _primitive(vec: list[Poly]) -> list[Poly]:
    g = Poly()
    for p in vec:
        if not p.is_zero():
            g = p.monic() if g.is_zero() else poly_gcd(g, p)
            if g.degree == 0:
                break
    if g.is_zero():
        return vec
    if g.degree > 0:
        vec = [p.exact_div(g) for p in vec]
    c = reduce(_frac_gcd, (p.content() for p in vec if not p.is_zero()))
    return [p * (1 / c) for p in vec]


def _frac_gcd(a: Fraction, b: Fraction) -> Fraction:
    return Fraction(gcd(a.numerator, b.numerator), lcm(a.denominator, b.denominator))


def normalize_dependence(vec: Sequence[Poly]) -> list[Poly]:
    """Divide out the polynomial gcd and rational content of the entries,
    then make the leading coefficient of the last nonzero entry positive."""
    vec = _primitive(list(vec))
    for p in reversed(vec):
        if not p.is_zero():
            if p.lead() < 0:
                vec = [-x for x in vec]
            break
    return vec


def ratfun_nullspace(rows: Sequence[Sequence]) -> list[Poly]:
    """First linear dependence among ``rows[0..k]`` with k minimal.

    Entries are Poly (or (num, den) pairs of Poly). Elimination is
    fraction-free with pivots taken in column order; each working row is
    kept primitive. Returns normalized polynomial coefficients c_0..c_k with
    sum c_i * rows[i] = 0.
    """
    if not rows:
        raise NoDependence("no rows supplied")
    width = len(rows[0])
    nrows = len(rows)
    basis: list[tuple[int, list[Poly]]] = []
    for k, row in enumerate(rows):
        if len(row) != width:
            raise ValueError("rows must have equal length")
        pairs = [_entry_to_poly_pair(x) for x in row]
        den = Poly([1])
        for _, d in pairs:
            den = _poly_lcm(den, d)
        work = [n * den.exact_div(d) for n, d in pairs]
        # the row was scaled by den, so its coefficient column starts at den
        work += [den if j == k else Poly() for j in range(nrows)]
        for piv, b in basis:
            if not work[piv].is_zero():
                a, c = b[piv], work[piv]
                work = [a * w - c * x for w, x in zip(work, b)]
                work = _primitive(work)
        lead = next((j for j in range(width) if not work[j].is_zero()), None)
        if lead is None:
            return normalize_dependence(work[width : width + k + 1])
        basis.append((lead, _primitive(work)))
    raise NoDependence(f"rows 0..{nrows - 1} are linearly independent")


def _poly_lcm(a: Poly, b: Poly) -> Poly:
    return (a * b).exact_div(poly_gcd(a, b)).monic()


def matrix_rank(rows: Sequence[Sequence]) -> int:
    """Rank over Q by Gaussian elimination."""
    m = [[rat(x) for x in r] for r in rows]
    rank, ncols = 0, len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(rank + 1, len(m)):
            f = m[i][c] / m[rank][c]
            if f:
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def nullspace(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    """Basis of {x : A x = 0} over Q, one vector per free column."""
    m = [[rat(x) for x in r] for r in rows]
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [a * inv for a in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        x = [Fraction(0)] * ncols
        x[free] = Fraction(1)
        for i, c in enumerate(pivots):
            x[c] = -m[i][free]
        basis.append(x)
    return basis
