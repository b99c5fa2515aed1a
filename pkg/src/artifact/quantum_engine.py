"""Small quantum cohomology of N and the instanton numbers of the
Calabi-Yau complete intersection X = 3 hyperplane sections of N.

Pipeline: two-point invariants by localization on M_{0,2}(N,1), the matrix
of p* in the basis T0..T12, a Picard-Fuchs operator for the last component,
log solutions of that operator from descendant seeds, and the mirror change
of variables that turns them into instanton numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, prod
from typing import Mapping, Sequence

from .exact_algebra import (
    DEFAULT_ORDER,
    LogSolutionTriple,
    NoDependence,
    Poly,
    QSeries,
    matrix_rank,
    normalize_dependence,
    nullspace,
    rat,
    ratfun_nullspace,
)
from .geometry_data import build_M02_fixpoints
from .intersection_counts import ring_N
from .localization import IntegrandSpec, bott_integral, chern, default_weights, gamma, psi

NBASIS = 13
CONIC_TWO_POINT = {(11, 12): Fraction(1)}  # <T11, T12>_{0,2}


def basis_integrand(r: int, marking: int) -> IntegrandSpec:
    """e_k^*(T_r) for the marking k in {1, 2}."""
    E, F = f"E{marking}", f"F{marking}"
    g1, g2, d2 = gamma(1, E), gamma(2, E), chern(F, 2)
    table = [
        IntegrandSpec.const(1),
        g1,
        g1**2,
        g2,
        d2,
        g1**3,
        g1 * g2,
        g1 * d2,
        g1**4,
        g1**2 * g2,
        g1**2 * d2,
        g1**5 * Fraction(1, 57),
        g1**6 * Fraction(1, 57),
    ]
    return table[r]


def codim(r: int) -> int:
    return ring_N().basis_degrees[r]


def _m02_records():
    return [f.record() for f in build_M02_fixpoints()]


def two_point(a: int, b: int, omega=None) -> Fraction:
    """<T_a, T_b>_{0,1} by Bott's formula on M_{0,2}(N,1)."""
    omega = omega or default_weights()
    return bott_integral(_m02_records(), basis_integrand(a, 1) * basis_integrand(b, 2), omega)


def descendant(k: int, r: int, omega=None, scale=1) -> Fraction:
    omega = omega or default_weights()
    return bott_integral(_m02_records(), psi() ** k * basis_integrand(r, 1) * rat(scale), omega)


@dataclass(frozen=True)
class TwoPointData:
    numbers: Mapping[tuple[int, int], Fraction]
    a1: Fraction
    b1: Fraction
    c1: Fraction
    weights: tuple


@lru_cache(maxsize=None)
def two_point_numbers(omega: tuple | None = None) -> TwoPointData:
    """All degree-one two-point numbers with codim T_a + codim T_b = 8 and the
    descendant seeds a1 = int c^2 e1*(T12), b1 = int c^3 e1*(T11),
    c1 = int c^4 e1*(T8/57)."""
    omega = tuple(omega or default_weights())
    nums = {}
    for a in range(NBASIS):
        for b in range(a, NBASIS):
            if codim(a) + codim(b) == 8:
                nums[(a, b)] = two_point(a, b, omega)
    a1 = descendant(2, 12, omega)
    b1 = descendant(3, 11, omega)
    c1 = descendant(4, 8, omega, Fraction(1, 57))
    return TwoPointData(nums, a1, b1, c1, omega)


# ---------------------------------------------------------------- quantum matrix


@dataclass(frozen=True)
class QuantumMatrix:
    """Entry [c][a] is the coefficient of T_c in p * T_a, a polynomial in q."""

    entries: tuple[tuple[Poly, ...], ...]

    def __getitem__(self, ij) -> Poly:
        i, j = ij
        return self.entries[i][j]

    def to_json(self) -> list[list[list[str]]]:
        return [[p.to_json() for p in row] for row in self.entries]

    def as_strings(self) -> list[list[str]]:
        return [[p.to_str("q") for p in row] for row in self.entries]


def _pair_value(nums: Mapping[tuple[int, int], Fraction], a: int, b: int) -> Fraction:
    return nums.get((min(a, b), max(a, b)), Fraction(0))


@lru_cache(maxsize=None)
def quantum_matrix(omega: tuple | None = None) -> QuantumMatrix:
    R = ring_N()
    ginv = R.inverse_pairing
    data = two_point_numbers(omega)
    p = R.basis_class(1)
    cols = []
    for a in range(NBASIS):
        col = [Poly() for _ in range(NBASIS)]
        classical = (p * R.basis_class(a)).coeffs
        for c, v in classical.items():
            col[c] = col[c] + Poly([v])
        for d, nums in ((1, data.numbers), (2, CONIC_TWO_POINT)):
            for b in range(NBASIS):
                val = _pair_value(nums, a, b)
                if not val:
                    continue
                for c in range(NBASIS):
                    if ginv[b][c]:
                        col[c] = col[c] + Poly.monomial(d, d * val * ginv[b][c])
        cols.append(col)
    return QuantumMatrix(tuple(tuple(cols[a][c] for a in range(NBASIS)) for c in range(NBASIS)))


def matrix_apply(M: QuantumMatrix, v: Sequence[Poly]) -> list[Poly]:
    return [sum((M[c, a] * v[a] for a in range(NBASIS)), Poly()) for c in range(NBASIS)]


def ring_relation_check(M: QuantumMatrix | None = None) -> list[Poly]:
    """p (q + p^3)(p^6 - 35 q p^3 - 243 q^2) applied to T0; zero if the
    relation holds."""
    M = M or quantum_matrix()
    q = Poly([0, 1])

    def P(v):
        return matrix_apply(M, v)

    def P3(v):
        return P(P(P(v)))

    v = [Poly([1])] + [Poly() for _ in range(NBASIS - 1)]
    a = P3(v)
    w = [x - 35 * q * y - 243 * q * q * z for x, y, z in zip(P3(a), a, v)]
    w = [x + q * y for x, y in zip(P3(w), w)]
    return P(w)


# ---------------------------------------------------------------- differential operators


@dataclass(frozen=True)
class DiffOp:
    """sum_a q^a P_a(D) with D = q d/dq, q's to the left."""

    blocks: tuple[Poly, ...]

    @classmethod
    def from_blocks(cls, blocks: Sequence[Poly]) -> "DiffOp":
        b = list(blocks)
        while b and b[-1].is_zero():
            b.pop()
        return cls(tuple(b))

    @property
    def order(self) -> int:
        return max(p.degree for p in self.blocks)

    @property
    def q_degree(self) -> int:
        return len(self.blocks) - 1

    def block(self, a: int) -> Poly:
        return self.blocks[a] if 0 <= a < len(self.blocks) else Poly()

    def apply(self, f: QSeries) -> QSeries:
        N = f.order
        out = [Fraction(0)] * (N + 1)
        for a, P in enumerate(self.blocks):
            for n in range(N + 1 - a):
                if f[n]:
                    out[n + a] += P(n) * f[n]
        return QSeries(out, N)

    def __matmul__(self, other: "DiffOp") -> "DiffOp":
        """Composition, using P(D) q^b = q^b P(D + b)."""
        out: dict[int, Poly] = {}
        for a, P in enumerate(self.blocks):
            for b, Q in enumerate(other.blocks):
                out[a + b] = out.get(a + b, Poly()) + P.shift(b) * Q
        return DiffOp.from_blocks([out.get(k, Poly()) for k in range(max(out, default=-1) + 1)])

    def apply_log(self, comps: Sequence[QSeries]) -> list[QSeries]:
        """Apply to sum_j t^j comps[j] (t = log q); returns the t-components."""
        J = len(comps)
        out = [QSeries.const(0, comps[0].order) for _ in range(J)]
        for j, g in enumerate(comps):
            for m in range(j + 1):
                # P(D) t^j = sum_m C(j,m) t^{j-m} P^{(m)}(D)
                der = DiffOp.from_blocks([_nth_derivative(P, m) for P in self.blocks])
                if der.blocks:
                    out[j - m] = out[j - m] + der.apply(g) * comb(j, m)
        return out

    def to_json(self) -> list[list[str]]:
        return [p.to_json() for p in self.blocks]

    def as_strings(self) -> list[str]:
        return [p.to_str("D") for p in self.blocks]


def _nth_derivative(P: Poly, m: int) -> Poly:
    for _ in range(m):
        P = P.derivative()
    return P


def cyclic_rows(M: QuantumMatrix | None = None, count: int = NBASIS + 1) -> list[list[Poly]]:
    """Rows v_k with D^k F12 = v_k . F, where F' = M F (' = D).

    v_0 = e12 and v_{k+1} = D(v_k) + v_k M, entries polynomial in q.
    """
    M = M or quantum_matrix()
    rows = [[Poly([1]) if i == NBASIS - 1 else Poly() for i in range(NBASIS)]]
    while len(rows) < count:
        v = rows[-1]
        theta = [Poly([k * c for k, c in enumerate(p.coeffs)]) for p in v]
        vm = [sum((v[c] * M[c, a] for c in range(NBASIS)), Poly()) for a in range(NBASIS)]
        rows.append([x + y for x, y in zip(theta, vm)])
    return rows


def _op_from_dependence(dep: Sequence[Poly]) -> DiffOp:
    qdeg = max(p.degree for p in dep)
    return DiffOp.from_blocks([Poly([c[a] for c in dep]) for a in range(qdeg + 1)])


def minimal_order_annihilator(M: QuantumMatrix | None = None) -> DiffOp:
    """First Q(q)-linear dependence among v_0, v_1, ...: the annihilator of
    F12 of least order in D."""
    return _op_from_dependence(ratfun_nullspace(cyclic_rows(M)))


def annihilators_bounded(rows: Sequence[Sequence[Poly]], order: int, q_degree: int) -> list[DiffOp]:
    """Basis over Q of operators sum_{k<=order} c_k(q) D^k, deg c_k <= q_degree,
    with sum_k c_k v_k = 0."""
    rows = rows[: order + 1]
    top = max(p.degree for r in rows for p in r) + q_degree
    eqs = []
    for i in range(NBASIS):
        for e in range(top + 1):
            eqs.append([rows[k][i][e - a] if e >= a else 0 for k in range(order + 1) for a in range(q_degree + 1)])
    out = []
    for x in nullspace(eqs):
        dep = [Poly(x[k * (q_degree + 1) : (k + 1) * (q_degree + 1)]) for k in range(order + 1)]
        out.append(_op_from_dependence(normalize_dependence(dep)))
    return out


@lru_cache(maxsize=None)
def picard_fuchs_N(M: QuantumMatrix | None = None, max_q_degree: int = 6) -> DiffOp:
    """Annihilator of F12 with the fewest q-blocks, then the least order.

    Candidates live in the Q-span of c_k(q) v_k; the search runs over
    q-degree first because the log-solution recursion needs one block per
    power of q and a leading block P_0 of full degree.
    """
    rows = cyclic_rows(M)
    for qd in range(max_q_degree + 1):
        for order in range(1, NBASIS + 1):
            found = annihilators_bounded(rows, order, qd)
            if len(found) == 1:
                return found[0]
            if len(found) > 1:
                raise ValueError(f"{len(found)} independent annihilators at order {order}, q-degree {qd}")
    raise NoDependence(f"no annihilator with q-degree <= {max_q_degree}")


def _poly_D(*coeffs_high_to_low) -> Poly:
    return Poly(reversed(coeffs_high_to_low))


D = Poly([0, 1])

QD_N_EXPECTED = DiffOp.from_blocks(
    [
        D**7 * _poly_D(299, -1035, 907) * (D - 1) ** 3,
        -(D**3) * _poly_D(10166, 5474, -7135, -5855, 1148, 2109, 513),
        _poly_D(-83122, -377246, -675645, -607063, -289727, -70962, -7668),
        -243 * (D + 1) * _poly_D(299, 1357, 1551),
    ]
)

QD_X_EXPECTED = DiffOp.from_blocks(
    [
        D**4,
        _poly_D(Fraction(-700, 19), Fraction(-1238, 19), Fraction(-999, 19), -20, -3),
        _poly_D(Fraction(-64745, 361), Fraction(-368006, 361), Fraction(-609133, 361), Fraction(-21724, 19), Fraction(-5382, 19)),
        _poly_D(Fraction(172719, 361), Fraction(17334, 19), Fraction(-321921, 361), Fraction(-38880, 19), Fraction(-16038, 19)),
        _poly_D(Fraction(46656, 361), Fraction(841266, 361), Fraction(1767825, 361), Fraction(1347192, 361), Fraction(354294, 361)),
        Fraction(-177147, 361) * (D + 1) ** 4,
    ]
)


# ---------------------------------------------------------------- log solutions


def solve_log_solutions(op: DiffOp, seeds: Mapping[str, Sequence], order: int = DEFAULT_ORDER) -> LogSolutionTriple:
    """psi0, psi1, psi2 with op annihilating psi0, t psi0 + psi1 and
    t^2/2 psi0 + t psi1 + psi2.

    ``seeds`` gives the first coefficients {"a": [...], "b": [...], "c": [...]},
    covering every index n with P_0(n) = 0.
    """
    P = [op.block(i) for i in range(op.q_degree + 1)]
    P1 = [p.derivative() for p in P]
    P2 = [p.derivative() for p in P1]
    nseed = len(seeds["a"])
    if not (len(seeds["b"]) == len(seeds["c"]) == nseed):
        raise ValueError("seed lists must have equal length")
    for n in range(nseed, order + 1):
        if P[0](n) == 0:
            raise ValueError(f"P_0 vanishes at n = {n}; operator not supported")
    a = [rat(x) for x in seeds["a"]]
    b = [rat(x) for x in seeds["b"]]
    c = [rat(x) for x in seeds["c"]]
    I = range(len(P))
    for n in range(nseed, order + 1):
        def s(seq, polys, start):
            return sum((seq[n - i] * polys[i](n - i) for i in I if i >= start and n - i >= 0), Fraction(0))

        p0 = P[0](n)
        a.append(-s(a, P, 1) / p0)
        b.append(-(s(a, P1, 0) + s(b, P, 1)) / p0)
        c.append(-(s(a, P2, 0) / 2 + s(b, P1, 0) + s(c, P, 1)) / p0)
    return LogSolutionTriple(QSeries(a, order), QSeries(b, order), QSeries(c, order))


def log_residuals(op: DiffOp, sol: LogSolutionTriple) -> list[list[QSeries]]:
    """op applied to the three solutions, as t-polynomials of series."""
    z = QSeries.const(0, sol.psi0.order)
    s0 = [sol.psi0]
    s1 = [sol.psi1, sol.psi0]
    s2 = [sol.psi2, sol.psi1, sol.psi0.scale(Fraction(1, 2))]
    return [op.apply_log(s) for s in (s0, s1, s2)]


SEEDS_N = {"a": [1, 3], "b": [0, -1], "c": [0, Fraction(-65, 19)]}


def seeds_from_localization(omega=None) -> dict:
    d = two_point_numbers(tuple(omega) if omega else None)
    return {"a": [1, d.a1], "b": [0, d.b1], "c": [0, d.c1]}


# ---------------------------------------------------------------- instantons


def R_coefficients(d: int, power: int = 3, up_to: int = 2) -> list[Fraction]:
    """Coefficients of p^0..p^up_to in prod_{m=1}^d (p+m)^power."""
    P = Poly([1])
    for m in range(1, d + 1):
        P = P * Poly([m, 1]) ** power
    return [P[i] for i in range(up_to + 1)]


def instanton_extraction(I0: QSeries, J1: QSeries, J2: QSeries, degree: int) -> list[Fraction]:
    """Solve J2/I0 - (J1/I0)^2/2 = (1/degree) sum_d n_d d sum_k q'^{kd}/k^2
    with q' = q exp(J1/I0)."""
    N = I0.order
    r1 = J1 / I0
    G = J2 / I0 - (r1 * r1).scale(Fraction(1, 2))
    qprime = QSeries.q(N) * r1.exp()
    q_of_qprime = qprime.reversion()
    Gp = G.compose(q_of_qprime)
    n: list[Fraction] = []
    for m in range(1, N + 1):
        known = sum(
            (n[d - 1] * d * Fraction(d * d, m * m) for d in range(1, m) if m % d == 0),
            Fraction(0),
        )
        n.append((Gp[m] * degree - known) / m)
    return n


def _check_integral(ns: Sequence[Fraction]) -> list[int]:
    out = []
    for d, v in enumerate(ns, start=1):
        if v.denominator != 1:
            raise ArithmeticError(f"n_{d} = {v} is not an integer")
        out.append(int(v))
    return out


def log_solutions_N(order: int = DEFAULT_ORDER, omega=None) -> LogSolutionTriple:
    omega = tuple(omega) if omega else None
    pf = picard_fuchs_N(quantum_matrix(omega))
    return solve_log_solutions(pf, seeds_from_localization(omega), order)


def instantons_X(dmax: int = 10, sol: LogSolutionTriple | None = None, omega=None) -> list[int]:
    if sol is None:
        sol = log_solutions_N(dmax, omega)
    N = dmax
    I0, J1, J2 = [Fraction(1)], [Fraction(0)], [Fraction(0)]
    for d in range(1, N + 1):
        R0, R1, R2 = R_coefficients(d)
        a, b, c = sol.psi0[d], sol.psi1[d], sol.psi2[d]
        I0.append(R0 * a)
        J1.append(R1 * a + R0 * b)
        J2.append(R2 * a + R1 * b + R0 * c)
    ns = instanton_extraction(QSeries(I0, N), QSeries(J1, N), QSeries(J2, N), 57)
    return _check_integral(ns)


def I0_X(order: int, sol: LogSolutionTriple) -> QSeries:
    return QSeries([1] + [R_coefficients(d)[0] * sol.psi0[d] for d in range(1, order + 1)], order)


def _p_series(d: int) -> list[Fraction]:
    """prod_{m=1}^{5d}(5p+m) / prod_{m=1}^d (p+m)^5 to order p^2."""
    num = Poly([1])
    for m in range(1, 5 * d + 1):
        num = Poly((num * Poly([m, 5])).coeffs[:3])
    den_inv = Poly([1])
    for m in range(1, d + 1):
        inv = Poly([Fraction(1, m), Fraction(-1, m * m), Fraction(1, m**3)])  # 1/(m+p)
        for _ in range(5):
            den_inv = Poly((den_inv * inv).coeffs[:3])
    out = num * den_inv
    return [out[i] for i in range(3)]


def quintic_instantons(dmax: int = 10) -> list[int]:
    I0, J1, J2 = [Fraction(1)], [Fraction(0)], [Fraction(0)]
    for d in range(1, dmax + 1):
        c0, c1, c2 = _p_series(d)
        I0.append(c0)
        J1.append(c1)
        J2.append(c2)
    ns = instanton_extraction(QSeries(I0, dmax), QSeries(J1, dmax), QSeries(J2, dmax), 5)
    return _check_integral(ns)


def quintic_lines_grassmannian(weights: Sequence[int] = (0, 1, 3, 7, 15)) -> Fraction:
    """int_{G(2,5)} c_6(Sym^5 S^dual) by Bott over the 10 coordinate planes."""
    w = [rat(x) for x in weights]
    total = Fraction(0)
    for i, j in combinations(range(5), 2):
        num = prod(-(k * w[i] + (5 - k) * w[j]) for k in range(6))
        den = prod(w[b] - w[a] for a in (i, j) for b in range(5) if b not in (i, j))
        if den == 0:
            raise ValueError("weights must be distinct")
        total += Fraction(num) / den
    return total


# ---------------------------------------------------------------- warm-ups


def kontsevich_p2(dmax: int) -> list[int]:
    K = [0, 1]
    for d in range(2, dmax + 1):
        s = 0
        for d1 in range(1, d):
            d2 = d - d1
            s += K[d1] * K[d2] * d1 * d1 * d2 * (d2 * comb(3 * d - 4, 3 * d1 - 2) - d1 * comb(3 * d - 4, 3 * d1 - 1))
        K.append(s)
    return K[1 : dmax + 1]


def conics_through_five_points(points: Sequence[Sequence[int]] | None = None) -> int:
    """Dimension of the space of plane conics through five points (as a
    number of conics: 1 when the points are general)."""
    if points is None:
        points = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3))
    rows = [[x * x, x * y, y * y, x * z, y * z, z * z] for x, y, z in points]
    nullity = 6 - matrix_rank(rows)
    return nullity  # a 1-dimensional solution space is a single conic


def aspinwall_morrison(n: Sequence) -> list[Fraction]:
    """N_d = sum_{k | d} k^-3 n_{d/k}."""
    n = [rat(x) for x in n]
    out = []
    for d in range(1, len(n) + 1):
        out.append(sum((n[d // k - 1] / k**3 for k in range(1, d + 1) if d % k == 0), Fraction(0)))
    return out
