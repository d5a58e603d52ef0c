"""Exact affine subspaces of Q^n, kept in reduced row echelon form."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


def rref(rows: Sequence[Sequence]) -> list[list[Fraction]] | None:
    """Reduced row echelon form of an augmented system ``[A | b]``.

    Zero rows are dropped. Returns None if the system is inconsistent.
    """
    m = [[Fraction(c) for c in r] for r in rows]
    if not m:
        return []
    ncols = len(m[0]) - 1
    pivot_row = 0
    for col in range(ncols):
        piv = next((i for i in range(pivot_row, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[pivot_row], m[piv] = m[piv], m[pivot_row]
        lead = m[pivot_row][col]
        m[pivot_row] = [c / lead for c in m[pivot_row]]
        for i in range(len(m)):
            if i != pivot_row and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[pivot_row])]
        pivot_row += 1
    out = []
    for r in m:
        if any(r[:-1]):
            out.append(r)
        elif r[-1]:
            return None
    return out


@dataclass(frozen=True)
class AffineSubspace:
    """Solution set of ``A x = b`` in Q^n; ``rows`` is the canonical RREF."""

    n: int
    rows: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_equations(cls, n: int, rows) -> "AffineSubspace | None":
        red = rref(rows)
        if red is None:
            return None
        return cls(n, tuple(tuple(r) for r in red))

    @classmethod
    def whole(cls, n: int) -> "AffineSubspace":
        return cls(n, ())

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def dim(self) -> int:
        return self.n - self.rank

    def _pivots(self) -> list[int]:
        return [next(j for j, c in enumerate(r[:-1]) if c) for r in self.rows]

    def free_columns(self) -> list[int]:
        piv = set(self._pivots())
        return [j for j in range(self.n) if j not in piv]

    def intersect(self, other: "AffineSubspace") -> "AffineSubspace | None":
        return AffineSubspace.from_equations(self.n, list(self.rows) + list(other.rows))

    def point(self) -> tuple[Fraction, ...]:
        """The particular solution with all free variables zero."""
        x = [Fraction(0)] * self.n
        for j, r in zip(self._pivots(), self.rows):
            x[j] = r[-1]
        return tuple(x)

    def directions(self) -> list[tuple[Fraction, ...]]:
        """A basis of the direction space, one vector per free variable."""
        out = []
        pivots = self._pivots()
        for f in self.free_columns():
            v = [Fraction(0)] * self.n
            v[f] = Fraction(1)
            for j, r in zip(pivots, self.rows):
                v[j] = -r[f]
            out.append(tuple(v))
        return out

    def contains(self, x: Sequence) -> bool:
        return all(sum(a * Fraction(xi) for a, xi in zip(r[:-1], x)) == r[-1] for r in self.rows)

    def is_subset_of(self, other: "AffineSubspace") -> bool:
        if not other.contains(self.point()):
            return False
        for d in self.directions():
            if any(sum(a * di for a, di in zip(r[:-1], d)) for r in other.rows):
                return False
        return True

    def linear_image(self, matrix: Sequence[Sequence]) -> "AffineSubspace":
        """Image under an invertible linear map given as an n x n matrix."""
        inv = _inverse(matrix)
        rows = []
        for r in self.rows:
            a = [sum(r[k] * inv[k][j] for k in range(self.n)) for j in range(self.n)]
            rows.append(a + [r[-1]])
        out = AffineSubspace.from_equations(self.n, rows)
        assert out is not None
        return out

    def describe(self, names: Sequence[str]) -> str:
        """Parametric form, e.g. ``n1 = 1 + t0, n2 = t0``."""
        p = self.point()
        dirs = self.directions()
        parts = []
        for i, name in enumerate(names):
            terms = [str(p[i])] if p[i] or not any(d[i] for d in dirs) else []
            for k, d in enumerate(dirs):
                if d[i]:
                    coef = "" if d[i] == 1 else ("-" if d[i] == -1 else f"{d[i]}*")
                    terms.append(f"{coef}t{k}")
            parts.append(f"{name} = " + " + ".join(terms).replace("+ -", "- "))
        return ", ".join(parts)


def _inverse(matrix):
    n = len(matrix)
    aug = [[Fraction(c) for c in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    red = rref([r + [0] for r in aug])
    if red is None or len(red) != n:
        raise ValueError("matrix is singular")
    return [r[n:2 * n] for r in red]
