"""Pure-Python reference kernels, used when the compiled module is absent."""
import numpy as np


def freudenthal_grid(l1: int, l2: int) -> np.ndarray:
    """Multiplicities of the irrep (l1, l2) on the (k1, k2) grid.

    Entry ``[k1, k2]`` is the multiplicity of ``lam - k1*e1 - k2*e2``.
    Grid points are visited by increasing level ``k1 + k2``, so every weight
    is computed after all the weights above it.
    """
    if l1 < 0 or l2 < 0:
        raise ValueError("highest weight must be dominant")
    n = l1 + l2
    m = [[0] * (n + 1) for _ in range(n + 1)]
    m[0][0] = 1
    for level in range(1, 2 * n + 1):
        for k1 in range(max(0, level - n), min(level, n) + 1):
            k2 = level - k1
            mu1 = l1 - 2 * k1 + k2
            mu2 = l2 + k1 - 2 * k2
            denom = k1 * (l1 + mu1 + 2) + k2 * (l2 + mu2 + 2)
            if denom == 0:
                continue
            num = 0
            for j1 in range(k1 - 1, -1, -1):
                if m[j1][k2]:
                    num += m[j1][k2] * (l1 - 2 * j1 + k2)
            for j2 in range(k2 - 1, -1, -1):
                if m[k1][j2]:
                    num += m[k1][j2] * (l2 + k1 - 2 * j2)
            for k in range(1, min(k1, k2) + 1):
                j1, j2 = k1 - k, k2 - k
                if m[j1][j2]:
                    num += m[j1][j2] * ((l1 - 2 * j1 + j2) + (l2 + j1 - 2 * j2))
            num *= 2
            q, r = divmod(num, denom)
            if r:
                raise ArithmeticError("non-integral Freudenthal multiplicity")
            m[k1][k2] = q
    return np.array(m, dtype=np.int64)


def convolve(a, b) -> np.ndarray:
    """Full 2-D integer convolution ``c[i+k, j+l] += a[i, j] * b[k, l]``."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    out = [[0] * (a.shape[1] + b.shape[1] - 1) for _ in range(a.shape[0] + b.shape[0] - 1)]
    bnz = [(k, l, int(b[k, l])) for k in range(b.shape[0]) for l in range(b.shape[1]) if b[k, l]]
    for i in range(a.shape[0]):
        for j in range(a.shape[1]):
            x = int(a[i, j])
            if not x:
                continue
            for k, l, y in bnz:
                out[i + k][j + l] += x * y
    return np.array(out, dtype=np.int64).reshape(
        a.shape[0] + b.shape[0] - 1, a.shape[1] + b.shape[1] - 1
    )
