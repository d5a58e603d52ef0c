"""Coulomb-gas vertex charges of the W3 algebra.

A charge is parameterised by four rational Kac indices ``(n1, n2, m1, m2)``::

    alpha = [(1-n1)/b - (1-m1) b] omega1 + [(1-n2)/b - (1-m2) b] omega2

so that ``alpha - Q = -P/b + b R`` with ``P = (n1, n2)`` and ``R = (m1, m2)``
in the omega basis, and ``Q = (1/b - b) rho``. Weyl elements act linearly on
``P`` and ``R`` at once, which keeps every operation exact.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .laurent import B, BINV, LaurentPoly, as_fraction
from .sl3 import Weight, WeylElement, weyl_element, weyl_elements


@dataclass(frozen=True, order=True)
class KacCharge:
    """Vertex charge with Kac indices ``[[n1, m1], [n2, m2]]``.

    The constructor takes the indices in the order ``(n1, n2, m1, m2)``; use
    :meth:`from_table` for the two-row layout.
    """

    n1: Fraction
    n2: Fraction
    m1: Fraction
    m2: Fraction

    def __post_init__(self):
        for name in ("n1", "n2", "m1", "m2"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))

    @classmethod
    def from_table(cls, rows: Sequence[Sequence]) -> "KacCharge":
        (n1, m1), (n2, m2) = rows
        return cls(n1, n2, m1, m2)

    @classmethod
    def from_split(cls, P, R) -> "KacCharge":
        return cls(P[0], P[1], R[0], R[1])

    @classmethod
    def degenerate(cls, lam, mu) -> "KacCharge":
        """Phi_{lam, mu}: indices ``n_i = lam_i + 1``, ``m_i = mu_i + 1``."""
        return cls(lam[0] + 1, lam[1] + 1, mu[0] + 1, mu[1] + 1)

    @property
    def indices(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.n1, self.n2, self.m1, self.m2)

    @property
    def table(self) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
        return ((self.n1, self.m1), (self.n2, self.m2))

    @property
    def P(self) -> Weight:
        return Weight(self.n1, self.n2)

    @property
    def R(self) -> Weight:
        return Weight(self.m1, self.m2)

    def is_positive_integral(self) -> bool:
        return all(c.denominator == 1 and c > 0 for c in self.indices)

    def reps(self) -> tuple[Weight, Weight]:
        """``(lam, mu)`` with ``lam_i = n_i - 1``, ``mu_i = m_i - 1``; integral charges only."""
        if not all(c.denominator == 1 for c in self.indices):
            raise ValueError(f"{self} has non-integral Kac indices")
        n1, n2, m1, m2 = (int(c) for c in self.indices)
        return Weight(n1 - 1, n2 - 1), Weight(m1 - 1, m2 - 1)

    def alpha(self) -> tuple[LaurentPoly, LaurentPoly]:
        """omega-basis components of the vertex charge as Laurent polynomials in b."""
        return (
            (1 - self.n1) * BINV - (1 - self.m1) * B,
            (1 - self.n2) * BINV - (1 - self.m2) * B,
        )

    def shifted(self) -> tuple[LaurentPoly, LaurentPoly]:
        """omega-basis components of ``alpha - Q``."""
        return (-self.n1 * BINV + self.m1 * B, -self.n2 * BINV + self.m2 * B)

    def __str__(self) -> str:
        return f"[[{self.n1}, {self.m1}], [{self.n2}, {self.m2}]]"


IDENTITY = KacCharge(1, 1, 1, 1)


def _dot(u, v) -> LaurentPoly:
    return (2 * u[0] * v[0] + u[0] * v[1] + u[1] * v[0] + 2 * u[1] * v[1]) / 3


def background_charge() -> tuple[LaurentPoly, LaurentPoly]:
    q = BINV - B
    return (q, q)


def q_squared() -> LaurentPoly:
    Q = background_charge()
    return _dot(Q, Q)


def central_charge() -> LaurentPoly:
    """``c = 2 - 12 Q^2 = 50 - 24/b^2 - 24 b^2``."""
    return 2 - 12 * q_squared()


def _check_b(b: float) -> float:
    b = float(b)
    if not b > 0 or math.isinf(b):
        raise ValueError(f"b must be a positive real, got {b}")
    return b


def beta_at(b: float) -> float:
    """``beta = 2 / sqrt(8 - 15 Q^2)``; defined while ``15 Q^2 < 8``."""
    b = _check_b(b)
    d = 8 - 15 * q_squared()(b)
    if d <= 0:
        raise ValueError(f"beta is not real at b={b}")
    return 2 / math.sqrt(d)


def h_of(charge: KacCharge) -> LaurentPoly:
    """Conformal dimension from the Kac-index formula."""
    n1, n2, m1, m2 = charge.indices
    s = (n1 + n2) * BINV - (m1 + m2) * B
    d = (n1 - n2) * BINV - (m1 - m2) * B
    return s * s / 4 + d * d / 12 - (BINV - B) ** 2


def h_from_charge_vector(charge: KacCharge) -> LaurentPoly:
    """``h = alpha.(alpha - 2Q) / 2`` computed with the Gram matrix."""
    a = charge.alpha()
    Q = background_charge()
    return _dot(a, (a[0] - 2 * Q[0], a[1] - 2 * Q[1])) / 2


def w_of(charge: KacCharge) -> LaurentPoly:
    """The factor ``w / (beta sqrt3)`` of the W0 eigenvalue, exact in b."""
    n1, n2, m1, m2 = charge.indices
    f1 = (n1 - n2) * BINV - (m1 - m2) * B
    f2 = (n1 + 2 * n2) * BINV - (m1 + 2 * m2) * B
    f3 = (2 * n1 + n2) * BINV - (2 * m1 + m2) * B
    return Fraction(2, 27) * f1 * f2 * f3


def w_numeric(charge: KacCharge, b: float) -> float:
    b = _check_b(b)
    return beta_at(b) * math.sqrt(3) * w_of(charge)(b)


def weyl_star(x: WeylElement, charge: KacCharge) -> KacCharge:
    """``x * alpha = Q + x(alpha - Q)``: acts as ``P -> xP``, ``R -> xR``."""
    return KacCharge.from_split(x(charge.P), x(charge.R))


def conjugate(charge: KacCharge) -> KacCharge:
    """omega1 <-> omega2, i.e. ``(n1, m1) <-> (n2, m2)``."""
    return KacCharge(charge.n2, charge.n1, charge.m2, charge.m1)


def reflect_2q(charge: KacCharge) -> KacCharge:
    """The charge ``2Q - alpha``; in split coordinates ``(P, R) -> (-P, -R)``."""
    return KacCharge(-charge.n1, -charge.n2, -charge.m1, -charge.m2)


def weyl_images(charge: KacCharge) -> list[KacCharge]:
    return [weyl_star(x, charge) for x in weyl_elements()]


def weyl_equivalent(a: KacCharge, b: KacCharge) -> bool:
    return b in weyl_images(a)


def canonical_representative(charge: KacCharge) -> KacCharge:
    """Deterministic representative of the Weyl-star orbit.

    Chooses the image whose ``R = (m1, m2)`` is dominant, then whose
    ``P = (n1, n2)`` is dominant, then the lexicographically largest
    ``(n1, n2, m1, m2)``. Fields with positive integer indices are their own
    representative.
    """
    def key(c: KacCharge):
        return (c.R.is_dominant(), c.P.is_dominant(), c.indices)

    return max(weyl_images(charge), key=key)


class FieldClass(enum.Enum):
    COMPLETELY_DEGENERATE = "completely_degenerate"
    SEMI_DEGENERATE_LEVEL_ONE = "semi_degenerate_level_one"
    GENERIC = "generic"


def degenerate_image(charge: KacCharge) -> KacCharge | None:
    """A Weyl image with all four indices positive integers, if any."""
    for c in weyl_images(charge):
        if c.is_positive_integral():
            return c
    return None


def classify(charge: KacCharge) -> FieldClass:
    """Degeneracy class at generic b.

    Semi-degenerate at level one means a Weyl image of the form
    ``[[n1, m1], [1, 1]]`` (charge along omega1), or its conjugate form
    ``[[1, 1], [n2, m2]]`` (along omega2).
    """
    if degenerate_image(charge) is not None:
        return FieldClass.COMPLETELY_DEGENERATE
    for c in weyl_images(charge):
        if (c.n2, c.m2) == (1, 1) or (c.n1, c.m1) == (1, 1):
            return FieldClass.SEMI_DEGENERATE_LEVEL_ONE
    return FieldClass.GENERIC


R_H2 = weyl_element("s1s2s1")
