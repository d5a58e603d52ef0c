"""Virasoro Coulomb gas: the rank-one counterpart used as a baseline.

Conventions differ from the W3 module on purpose: here ``h = alpha(alpha - 2Q)``
with ``Q = (1/b - b)/2`` and ``alpha_{r,s} = (1-r)/(2b) - (1-s) b/2``, so

    h_{r,s} = ((r/b - s b)^2 - (1/b - b)^2) / 4,    c = 13 - 6/b^2 - 6 b^2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .laurent import B, BINV, LaurentPoly, as_fraction


@dataclass(frozen=True, order=True)
class VirCharge:
    r: Fraction
    s: Fraction

    def __post_init__(self):
        object.__setattr__(self, "r", as_fraction(self.r))
        object.__setattr__(self, "s", as_fraction(self.s))

    def alpha(self) -> LaurentPoly:
        return (1 - self.r) * BINV / 2 - (1 - self.s) * B / 2

    def reflected(self) -> "VirCharge":
        """``2Q - alpha``."""
        return VirCharge(-self.r, -self.s)

    def __str__(self) -> str:
        return f"({self.r}, {self.s})"


def vir_q() -> LaurentPoly:
    return (BINV - B) / 2


def vir_c() -> LaurentPoly:
    return 1 - 24 * vir_q() ** 2


def vir_h(r, s) -> LaurentPoly:
    r, s = as_fraction(r), as_fraction(s)
    return ((r * BINV - s * B) ** 2 - (BINV - B) ** 2) / 4


def vir_h_from_alpha(charge: VirCharge) -> LaurentPoly:
    a = charge.alpha()
    return a * (a - 2 * vir_q())


def vir_equivalent(a: VirCharge, b: VirCharge) -> bool:
    """``V_alpha = V_{2Q - alpha}``."""
    return a == b or a == b.reflected()


def vir_fuse_deg_generic(r: int, s: int, alpha: VirCharge) -> dict[VirCharge, int]:
    """Phi_{r,s} x V_alpha: ``rs`` charges ``(r_a + r - 1 - 2j, s_a + s - 1 - 2k)``."""
    if not (isinstance(r, int) and isinstance(s, int)) or r < 1 or s < 1:
        raise ValueError(f"(r, s) must be positive integers, got ({r}, {s})")
    out: dict[VirCharge, int] = {}
    for j in range(r):
        for k in range(s):
            c = VirCharge(alpha.r + r - 1 - 2 * j, alpha.s + s - 1 - 2 * k)
            out[c] = out.get(c, 0) + 1
    return out


def vir_fixed_points() -> list[VirCharge]:
    """Charges with ``V_alpha`` equivalent to one of the two terms of ``Phi_{2,1} x V_alpha``.

    A term equal to ``alpha`` itself is impossible, so the term must equal
    ``2Q - alpha``: ``(r +/- 1, s) = (-r, -s)``.
    """
    return [VirCharge(Fraction(-d, 2), 0) for d in (1, -1)]


def vir_spin() -> VirCharge:
    return VirCharge(Fraction(1, 2), 0)


def vir_z2(r, s, p: int | None = None, pp: int | None = None) -> int:
    """Z2 charge of ``Phi_{r,s}``.

    Without a model this is ``s - 1 mod 2`` (rational ``s`` must be integral).
    In M(p, p') it is ``s - 1`` for even ``p'``, ``r - 1`` for even ``p`` and
    ``r + s`` when both are odd.
    """
    r, s = as_fraction(r), as_fraction(s)
    if p is None:
        value = s - 1
    elif pp % 2 == 0:
        value = s - 1
    elif p % 2 == 0:
        value = r - 1
    else:
        value = r + s
    if value.denominator != 1:
        raise ValueError(f"Z2 charge undefined for ({r}, {s})")
    return int(value) % 2


def vir_spin_in_model(p: int, pp: int) -> tuple[VirCharge, VirCharge]:
    """The two Kac labels ``((p -/+ 1)/2, p'/2)`` of the spin field in M(p, p')."""
    if p % 2 == 0 or pp % 2:
        raise ValueError(f"the spin field sits in the Kac table only for odd p, even p'; got ({p}, {pp})")
    return VirCharge((p - 1) // 2, pp // 2), VirCharge((p + 1) // 2, pp // 2)


@dataclass(frozen=True)
class SectorRow:
    r: int
    s: int
    expected: bool
    found: bool


def vir_sector_check(cutoff: int = 7) -> list[SectorRow]:
    """For ``r, s <= cutoff``: is ``Phi_{r,s}`` in ``sigma x sigma``?

    Expected exactly when ``s`` is odd, i.e. the Z2-neutral fields.
    """
    spin = vir_spin()
    rows = []
    for r in range(1, cutoff + 1):
        for s in range(1, cutoff + 1):
            found = any(vir_equivalent(t, spin) for t in vir_fuse_deg_generic(r, s, spin))
            rows.append(SectorRow(r, s, vir_z2(r, s) == 0, found))
    return rows


# --------------------------------------------------------------------------
# curves

H_SPIN = vir_h(Fraction(1, 2), 0)
H12 = vir_h(1, 2)
H13 = vir_h(1, 3)
H21 = vir_h(2, 1)


def on_curve_residual() -> LaurentPoly:
    """``8 h_spin (h13 + 1) - (2 h13 - h13^2)``; zero on the O(n) curve."""
    return 8 * H_SPIN * (H13 + 1) - (2 * H13 - H13 * H13)


def potts_curve_residual() -> LaurentPoly:
    """``2 h_spin (2 h21 + 1) - (h21 - h21^2)``; zero on the Potts curve."""
    return 2 * H_SPIN * (2 * H21 + 1) - (H21 - H21 * H21)


def half_line_residual() -> LaurentPoly:
    """``3 h13 - (8 h12 + 1)``."""
    return 3 * H13 - (8 * H12 + 1)


def on_slope_at_origin() -> Fraction:
    """``d h13 / d h_spin`` along the O(n) curve where both vanish (``b^2 = 1/2``)."""
    b2 = Fraction(1, 2)
    assert H13.at_b2(b2) == 0 and H_SPIN.at_b2(b2) == 0
    num = H13.derivative().shift(1).at_b2(b2)
    den = H_SPIN.derivative().shift(1).at_b2(b2)
    return num / den


VIR_CURVE_COLUMNS = ("c", "h_spin", "h21", "h13", "h12", "sqrtQ", "n")


def vir_curves(grid: Iterable, squared: bool = False, exact: bool = False) -> list[dict]:
    """Rows of the Virasoro curves; ``sqrtQ`` and ``n`` are always decimals.

    ``sqrtQ = -2 cos(pi b^2)`` and ``n = -2 cos(pi / b^2)``.
    """
    forms = {"c": vir_c(), "h_spin": H_SPIN, "h21": H21, "h13": H13, "h12": H12}
    rows = []
    for g in grid:
        if exact:
            g = as_fraction(g)
            b2 = g if squared else g * g
            if b2 <= 0:
                raise ValueError("grid values must be positive")
            row = {"b2": b2}
            row.update({k: f.at_b2(b2) for k, f in forms.items()})
            fb2 = float(b2)
        else:
            g = float(g)
            if g <= 0:
                raise ValueError("grid values must be positive")
            b = math.sqrt(g) if squared else g
            row = {"b": b}
            row.update({k: f(b) for k, f in forms.items()})
            fb2 = b * b
        row["sqrtQ"] = -2 * math.cos(math.pi * fb2)
        row["n"] = -2 * math.cos(math.pi / fb2)
        rows.append(row)
    return rows
