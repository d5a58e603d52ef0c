"""Exact Laurent polynomials in a single variable ``b``.

Conformal dimensions, central charges and the cubic W-eigenvalue factor are
all finite Laurent series in ``b`` with rational coefficients, so every
special-point identity can be checked as an exact equality.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Union

Number = Union[int, Fraction]


def as_fraction(x) -> Fraction:
    """Coerce ints, Fractions and rational strings (``"2/3"``) to Fraction.

    Floats are rejected: they would silently break exactness.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class LaurentPoly:
    """Finite sum ``sum_k c_k b**k`` with rational ``c_k``.

    Instances are immutable and hashable. Zero coefficients are never stored.
    """

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Mapping[int, Number] | None = None):
        clean = {}
        for k, c in (coeffs or {}).items():
            c = as_fraction(c)
            if c:
                clean[int(k)] = c
        self._coeffs = dict(sorted(clean.items()))
        self._hash = None

    # constructors
    @classmethod
    def const(cls, c: Number) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, k: int, c: Number = 1) -> "LaurentPoly":
        return cls({k: c})

    @classmethod
    def b(cls) -> "LaurentPoly":
        return cls({1: 1})

    @classmethod
    def binv(cls) -> "LaurentPoly":
        return cls({-1: 1})

    # container protocol
    @property
    def coeffs(self) -> dict[int, Fraction]:
        return dict(self._coeffs)

    def __getitem__(self, k: int) -> Fraction:
        return self._coeffs.get(k, Fraction(0))

    def exponents(self) -> list[int]:
        return list(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    # ring operations
    @staticmethod
    def _lift(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        return LaurentPoly.const(as_fraction(other))

    def __add__(self, other) -> "LaurentPoly":
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        out = dict(self._coeffs)
        for k, c in other._coeffs.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other) -> "LaurentPoly":
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return self._lift(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        out: dict[int, Fraction] = {}
        for k1, c1 in self._coeffs.items():
            for k2, c2 in other._coeffs.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "LaurentPoly":
        # only division by a nonzero rational; no rational functions here
        d = as_fraction(other)
        if d == 0:
            raise ZeroDivisionError("division of LaurentPoly by zero")
        return LaurentPoly({k: c / d for k, c in self._coeffs.items()})

    def __pow__(self, n: int) -> "LaurentPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        out = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``b**k``."""
        return LaurentPoly({e + k: c for e, c in self._coeffs.items()})

    def derivative(self) -> "LaurentPoly":
        """d/db."""
        return LaurentPoly({e - 1: e * c for e, c in self._coeffs.items() if e})

    # comparisons
    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self._coeffs == other._coeffs
        try:
            return self._coeffs == LaurentPoly.const(as_fraction(other))._coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._coeffs.items()))
        return self._hash

    # evaluation
    def parity(self) -> int | None:
        """0 if all exponents are even, 1 if all odd, None if mixed or zero."""
        parities = {e % 2 for e in self._coeffs}
        return parities.pop() if len(parities) == 1 else None

    def at_b2(self, b2: Number) -> Fraction:
        """Exact value at ``b = sqrt(b2)``; requires only even exponents."""
        b2 = as_fraction(b2)
        if b2 <= 0:
            raise ValueError("b^2 must be positive")
        if any(e % 2 for e in self._coeffs):
            raise ValueError("odd powers of b are irrational at rational b^2; shift by b first")
        return sum((c * b2 ** (e // 2) for e, c in self._coeffs.items()), Fraction(0))

    def at(self, b: Number) -> Fraction:
        """Exact value at a rational ``b``."""
        b = as_fraction(b)
        if b == 0:
            raise ValueError("b must be nonzero")
        return sum((c * b ** e for e, c in self._coeffs.items()), Fraction(0))

    def __call__(self, b: float) -> float:
        if b <= 0:
            raise ValueError("b must be positive")
        return math.fsum(float(c) * b ** e for e, c in self._coeffs.items())

    # display
    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for e, c in sorted(self._coeffs.items(), reverse=True):
            mono = "" if e == 0 else ("b" if e == 1 else f"b^{e}")
            if mono:
                coef = "" if c == 1 else ("-" if c == -1 else f"{c}*")
            else:
                coef = str(c)
            parts.append(f"{coef}{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict[str, str]:
        return {str(e): str(c) for e, c in self._coeffs.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> "LaurentPoly":
        return cls({int(e): Fraction(c) for e, c in data.items()})


B = LaurentPoly.b()
BINV = LaurentPoly.binv()
ONE = LaurentPoly.const(1)
ZERO = LaurentPoly()


def lsum(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    out = ZERO
    for p in polys:
        out = out + p
    return out
