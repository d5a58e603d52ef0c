"""Independent cross-checks for the sl3 kernels.

Nothing here touches the Freudenthal recursion or the peeling decomposition:

* ``convolution_character`` builds [a, b] from the two 3-dimensional
  representations only, via Sym^a(V) (x) Sym^b(V*) = [a, b] + Sym^(a-1)(V) (x) Sym^(b-1)(V*).
* ``kostant_multiplicity`` counts with the Kostant partition function, where
  ``P(k1*e1 + k2*e2) = min(k1, k2) + 1``.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache

from .sl3 import H, RHO, Weight, weyl_elements


def _convolve(a: Counter, b: Counter) -> Counter:
    out: Counter = Counter()
    for w1, m1 in a.items():
        for w2, m2 in b.items():
            out[w1 + w2] += m1 * m2
    return out


@lru_cache(maxsize=None)
def _sym_power(n: int, sign: int) -> Counter:
    """Character of Sym^n of the fundamental (sign=+1) or antifundamental (sign=-1)."""
    out: Counter = Counter()
    for i in range(n + 1):
        for j in range(n + 1 - i):
            k = n - i - j
            out[(H[0] * i + H[1] * j + H[2] * k) * sign] += 1
    return out


@lru_cache(maxsize=None)
def _mixed_tensor(a: int, b: int) -> Counter:
    return _convolve(_sym_power(a, 1), _sym_power(b, -1))


def convolution_character(l1: int, l2: int) -> dict[Weight, int]:
    """Weight multiplicities of [l1, l2] from iterated convolution of fundamental characters."""
    full = Counter(_mixed_tensor(l1, l2))
    if l1 and l2:
        full.subtract(_mixed_tensor(l1 - 1, l2 - 1))
    out = {w: m for w, m in full.items() if m}
    if any(m < 0 for m in out.values()):
        raise ArithmeticError("negative multiplicity in convolution oracle")
    return out


def kostant_partition(v: Weight) -> int:
    """Number of ways to write ``v`` as a non-negative combination of e1, e2, e1+e2."""
    k1 = (2 * v[0] + v[1]) / 3
    k2 = (v[0] + 2 * v[1]) / 3
    if k1 != int(k1) or k2 != int(k2) or k1 < 0 or k2 < 0:
        return 0
    return int(min(k1, k2)) + 1


def kostant_multiplicity(highest, w) -> int:
    lr = Weight(*highest) + RHO
    wr = Weight(*w) + RHO
    return sum(x.det * kostant_partition(x(lr) - wr) for x in weyl_elements())


def convolution_tensor(lam, mu) -> dict[Weight, int]:
    """Tensor product multiplicities by brute force on oracle characters.

    Repeatedly removes the oracle character of the highest remaining weight.
    """
    rest = Counter(
        _convolve(Counter(convolution_character(*lam)), Counter(convolution_character(*mu)))
    )
    out: dict[Weight, int] = {}
    while True:
        live = [w for w, m in rest.items() if m]
        if not live:
            return out
        top = max(live, key=lambda w: (w[0] + w[1], w[0]))
        n = rest[top]
        out[Weight(*top)] = n
        for w, m in convolution_character(*top).items():
            rest[w] -= n * m

