"""sl3 weight lattice, Weyl group, irreducible representations and fusion.

Weights are stored in the basis of fundamental weights (omega1, omega2), so
integral weights have integer coordinates. The Gram matrix
``omega_i . omega_j = (1 + delta_ij) / 3`` carries the geometry.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping, NamedTuple

import numpy as np

from . import kernels


def balanced_mod3(x) -> int:
    """Representative of ``x mod 3`` in {-1, 0, 1}; ``x`` must be an integer."""
    x = Fraction(x)
    if x.denominator != 1:
        raise ValueError(f"Z3 charge of a non-integral quantity {x}")
    r = int(x) % 3
    return r - 3 if r == 2 else r


class Weight(NamedTuple):
    """A vector ``a1*omega1 + a2*omega2`` (coordinates are int or Fraction)."""

    a1: object
    a2: object

    def __add__(self, other):
        return Weight(self.a1 + other[0], self.a2 + other[1])

    def __sub__(self, other):
        return Weight(self.a1 - other[0], self.a2 - other[1])

    def __neg__(self):
        return Weight(-self.a1, -self.a2)

    def __mul__(self, k):
        return Weight(self.a1 * k, self.a2 * k)

    __rmul__ = __mul__

    def dot(self, other) -> Fraction:
        u1, u2 = self
        v1, v2 = other
        return Fraction(2 * u1 * v1 + u1 * v2 + u2 * v1 + 2 * u2 * v2) / 3

    def norm2(self) -> Fraction:
        return self.dot(self)

    def conjugate(self) -> "Weight":
        return Weight(self.a2, self.a1)

    def is_integral(self) -> bool:
        return all(Fraction(c).denominator == 1 for c in self)

    def is_dominant(self) -> bool:
        return self.a1 >= 0 and self.a2 >= 0

    def normalized(self) -> "Weight":
        """Same weight with integral coordinates as ``int``."""
        return Weight(*(int(c) if Fraction(c).denominator == 1 else Fraction(c) for c in self))

    def cartesian(self) -> tuple[float, float]:
        """Plane coordinates with omega1 = (sqrt3, 1)/sqrt6, omega2 = (0, sqrt(2/3))."""
        a1, a2 = float(self.a1), float(self.a2)
        return (a1 * np.sqrt(3.0) / np.sqrt(6.0), a1 / np.sqrt(6.0) + a2 * np.sqrt(2.0 / 3.0))


OMEGA1 = Weight(1, 0)
OMEGA2 = Weight(0, 1)
ZERO = Weight(0, 0)
E1 = Weight(2, -1)
E2 = Weight(-1, 2)
RHO = Weight(1, 1)
H1 = Weight(1, 0)
H2 = Weight(-1, 1)
H3 = Weight(0, -1)
H = (H1, H2, H3)
ROOTS = (E1, E2, RHO, -E1, -E2, -RHO)
POSITIVE_ROOTS = (E1, E2, RHO)


def conjugate_weight(w) -> Weight:
    """Exchange of omega1 and omega2."""
    return Weight(w[1], w[0])


def z3_charge(highest) -> int:
    """Triality ``(lam1 - lam2) mod 3`` as a balanced residue in {-1, 0, 1}."""
    return balanced_mod3(highest[0] - highest[1])


@dataclass(frozen=True)
class WeylElement:
    """An element of the sl3 Weyl group acting on omega-basis coordinates.

    ``matrix = ((a, b), (c, d))`` maps ``(a1, a2)`` to ``(a*a1 + b*a2, c*a1 + d*a2)``.
    Labels are words in the simple reflections, applied right to left.
    """

    label: str
    matrix: tuple

    def __call__(self, w) -> Weight:
        (a, b), (c, d) = self.matrix
        return Weight(a * w[0] + b * w[1], c * w[0] + d * w[1])

    def __matmul__(self, other: "WeylElement") -> "WeylElement":
        return _ELEMENTS_BY_MATRIX[_matmul(self.matrix, other.matrix)]

    @property
    def inverse(self) -> "WeylElement":
        (a, b), (c, d) = self.matrix
        det = a * d - b * c
        return _ELEMENTS_BY_MATRIX[((d * det, -b * det), (-c * det, a * det))]

    @property
    def det(self) -> int:
        (a, b), (c, d) = self.matrix
        return a * d - b * c

    def __repr__(self) -> str:
        return f"WeylElement({self.label})"


def _matmul(x, y):
    return tuple(
        tuple(sum(x[i][k] * y[k][j] for k in range(2)) for j in range(2)) for i in range(2)
    )


_S1 = ((-1, 0), (1, 1))
_S2 = ((1, 1), (0, -1))
_WORDS = {
    "id": ((1, 0), (0, 1)),
    "s1": _S1,
    "s2": _S2,
    "s1s2": _matmul(_S1, _S2),
    "s2s1": _matmul(_S2, _S1),
    "s1s2s1": _matmul(_matmul(_S1, _S2), _S1),
}
_ELEMENTS = tuple(WeylElement(label, m) for label, m in _WORDS.items())
_ELEMENTS_BY_MATRIX = {x.matrix: x for x in _ELEMENTS}
_ELEMENTS_BY_LABEL = {x.label: x for x in _ELEMENTS}
assert len(_ELEMENTS_BY_MATRIX) == 6


def weyl_elements() -> list[WeylElement]:
    """The six elements of the Weyl group, identity first."""
    return list(_ELEMENTS)


def weyl_element(label: str) -> WeylElement:
    return _ELEMENTS_BY_LABEL[label]


def weyl_orbit(w) -> set[Weight]:
    return {x(w) for x in _ELEMENTS}


def dominant_image(w) -> tuple[Weight, WeylElement]:
    """The unique Weyl image in the closed dominant chamber, with an element reaching it."""
    for x in _ELEMENTS:
        v = x(w)
        if v.is_dominant():
            return v, x
    raise AssertionError("every weight has a dominant Weyl image")


# --------------------------------------------------------------------------
# irreducible representations


def weyl_dimension(l1: int, l2: int) -> int:
    return (l1 + 1) * (l2 + 1) * (l1 + l2 + 2) // 2


def _check_highest(highest) -> tuple[int, int]:
    l1, l2 = (Fraction(c) for c in highest)
    if l1.denominator != 1 or l2.denominator != 1:
        raise ValueError(f"highest weight {tuple(highest)} is not integral")
    if l1 < 0 or l2 < 0:
        raise ValueError(f"highest weight {tuple(highest)} is not dominant")
    return int(l1), int(l2)


def weight_set(highest) -> frozenset[Weight]:
    """Weights of [highest] by the string-lowering closure.

    Starting from the highest weight, a weight ``v`` with ``v_i > 0``
    contributes ``v - e_i, ..., v - v_i*e_i``.
    """
    l1, l2 = _check_highest(highest)
    seen = {Weight(l1, l2)}
    stack = [Weight(l1, l2)]
    while stack:
        v = stack.pop()
        for i, e in ((0, E1), (1, E2)):
            for k in range(1, v[i] + 1):
                u = v - e * k
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
    return frozenset(seen)


@dataclass(frozen=True)
class Irrep:
    """Irreducible representation with its full weight-multiplicity table."""

    highest: Weight
    table: Mapping[Weight, int] = field(repr=False, compare=False)

    @property
    def dimension(self) -> int:
        return sum(self.table.values())

    def multiplicity(self, w) -> int:
        return self.table.get(Weight(*w), 0)

    def weights(self) -> list[Weight]:
        return list(self.table)

    @property
    def z3(self) -> int:
        return z3_charge(self.highest)

    @property
    def conjugate(self) -> "Irrep":
        return weight_system(self.highest.conjugate())

    def __contains__(self, w) -> bool:
        return Weight(*w) in self.table


def _grid_to_table(l1: int, l2: int, grid: np.ndarray) -> dict[Weight, int]:
    table = {}
    for k1, k2 in zip(*np.nonzero(grid)):
        k1, k2 = int(k1), int(k2)
        table[Weight(l1 - 2 * k1 + k2, l2 + k1 - 2 * k2)] = int(grid[k1, k2])
    return table


@lru_cache(maxsize=None)
def _weight_system(l1: int, l2: int) -> Irrep:
    grid = kernels.freudenthal_grid(l1, l2)
    table = _grid_to_table(l1, l2, grid)
    if frozenset(table) != weight_set((l1, l2)):
        raise ArithmeticError(f"Freudenthal support disagrees with the weight set of ({l1},{l2})")
    return Irrep(Weight(l1, l2), MappingProxyType(table))


def weight_system(highest) -> Irrep:
    """The irrep [highest] with multiplicities from the Freudenthal recursion.

    Parameters
    ----------
    highest : pair of non-negative integers
        Highest weight ``(lam1, lam2)`` in the omega basis.

    Raises
    ------
    ValueError
        If ``highest`` is not integral and dominant.
    """
    return _weight_system(*_check_highest(highest))


def multiplicity(irrep, w) -> int:
    if not isinstance(irrep, Irrep):
        irrep = weight_system(irrep)
    return irrep.multiplicity(w)


def contains_hj_triple(irrep, sign: int) -> bool:
    """Whether [lam] holds all of ``sign*h1, sign*h2, sign*h3``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if not isinstance(irrep, Irrep):
        irrep = weight_system(irrep)
    return all(h * sign in irrep for h in H)


def contains_zero(irrep) -> bool:
    if not isinstance(irrep, Irrep):
        irrep = weight_system(irrep)
    return ZERO in irrep


# --------------------------------------------------------------------------
# characters and tensor products


def dense_character(highest) -> tuple[np.ndarray, int]:
    """Weight multiplicities on a square box, with the box offset.

    Entry ``[a1 + off, a2 + off]`` is the multiplicity of ``(a1, a2)``.
    """
    irrep = weight_system(highest)
    off = int(irrep.highest[0] + irrep.highest[1])
    arr = np.zeros((2 * off + 1, 2 * off + 1), dtype=np.int64)
    for (a1, a2), m in irrep.table.items():
        arr[a1 + off, a2 + off] = m
    return arr, off


def _peel(char: np.ndarray, off: int) -> dict[Weight, int]:
    """Decompose a W-invariant character into irreducible characters."""
    char = char.copy()
    out: dict[Weight, int] = {}
    while True:
        i, j = np.nonzero(char)
        if len(i) == 0:
            return out
        a1 = i - off
        a2 = j - off
        k = np.lexsort((a1, a1 + a2))[-1]
        nu = Weight(int(a1[k]), int(a2[k]))
        n = int(char[i[k], j[k]])
        if not nu.is_dominant() or n <= 0:
            raise ArithmeticError(f"character is not a non-negative sum of irreducibles at {nu}")
        out[nu] = n
        sub, soff = dense_character(nu)
        lo = off - soff
        char[lo:lo + sub.shape[0], lo:lo + sub.shape[1]] -= n * sub


@lru_cache(maxsize=None)
def _tensor(lam: tuple[int, int], mu: tuple[int, int]) -> tuple[tuple[Weight, int], ...]:
    a, oa = dense_character(lam)
    b, ob = dense_character(mu)
    prod = kernels.convolve(a, b)
    parts = _peel(prod, oa + ob)
    return tuple(sorted(parts.items()))


def tensor_decompose(lam, mu) -> dict[Weight, int]:
    """Multiplicities ``N_{lam mu}^nu`` of [nu] in [lam] (x) [mu].

    Character convolution followed by repeated removal of the highest
    remaining weight.
    """
    lam = _check_highest(lam)
    mu = _check_highest(mu)
    if lam > mu:
        lam, mu = mu, lam
    return dict(_tensor(lam, mu))


def fusion_coefficient(lam, mu, nu) -> int:
    return tensor_decompose(lam, mu).get(Weight(*_check_highest(nu)), 0)


def dominant_weights(cutoff: int) -> list[Weight]:
    """All dominant integral weights with ``lam1 + lam2 <= cutoff``."""
    return [Weight(l1, s - l1) for s in range(cutoff + 1) for l1 in range(s, -1, -1)]


def is_weyl_invariant(irrep: Irrep) -> bool:
    return all(irrep.multiplicity(x(w)) == m for w, m in irrep.table.items() for x in _ELEMENTS)


def sum_squared_multiplicities(irrep) -> int:
    if not isinstance(irrep, Irrep):
        irrep = weight_system(irrep)
    return sum(m * m for m in irrep.table.values())


def neutral_multiplicity_sum(lam) -> int:
    """``sum_nu N_{lam lam*}^nu m_nu(0)``: zero-weight multiplicity of [lam] (x) [lam*]."""
    lam = Weight(*_check_highest(lam))
    return sum(n * multiplicity(nu, ZERO) for nu, n in tensor_decompose(lam, lam.conjugate()).items())

