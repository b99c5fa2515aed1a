"""(1,1)-conic contributions by localization on M^{1,1}, and the conic
totals on the three Calabi-Yau sections."""

from __future__ import annotations

from fractions import Fraction

from .geometry_data import build_M11_fixpoints
from .intersection_counts import DataIntegrityError, conic02_counts
from .localization import IntegrandSpec, bott_integral, chern, default_weights

TARGETS = ("X", "Y", "Z")


def conic_integrands() -> tuple[IntegrandSpec, IntegrandSpec, IntegrandSpec]:
    """c3(O(p))^3, c4(F^v) c5(O(2p)), c9(S2F^v) on the conic moduli."""
    return (
        chern("O(p)", 3) ** 3,
        chern("F^v", 4) * chern("O(2p)", 5),
        chern("S2F^v", 9),
    )


def _records():
    return [f.record() for f in build_M11_fixpoints()]


def conic11_integrals(omega=None) -> tuple[Fraction, Fraction, Fraction]:
    omega = omega or default_weights()
    pts = _records()
    return tuple(bott_integral(pts, g, omega) for g in conic_integrands())


def conic11_counts(omega=None) -> tuple[int, int, int]:
    out = []
    for v in conic11_integrals(omega):
        if v.denominator != 1:
            raise DataIntegrityError(f"(1,1) conic integral {v} is not an integer")
        out.append(int(v))
    return tuple(out)


def conic_totals(omega=None) -> tuple[int, int, int]:
    a = conic11_counts(omega)
    b = conic02_counts()
    return tuple(x + y for x, y in zip(a, b))


def orbit_sizes() -> dict[str, int]:
    """Number of M^{1,1} fixpoints of each kind."""
    out: dict[str, int] = {}
    for f in build_M11_fixpoints():
        out[f.kind] = out.get(f.kind, 0) + 1
    return out
