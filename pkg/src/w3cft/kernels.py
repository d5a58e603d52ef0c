"""Kernel backend selection.

The compiled ``_kernels`` extension is used when it imports; otherwise the
pure-Python twins from ``_pykernels``. Setting ``W3CFT_PURE_PYTHON=1`` forces
the fallback.
"""
import os

from . import _pykernels

BACKEND = "python"
freudenthal_grid = _pykernels.freudenthal_grid
convolve = _pykernels.convolve

if os.environ.get("W3CFT_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels
    except ImportError:
        pass
    else:
        BACKEND = "compiled"
        freudenthal_grid = _kernels.freudenthal_grid
        convolve = _kernels.convolve


def backends() -> dict:
    """All importable backends by name, for benchmarks and cross-checks."""
    out = {"python": _pykernels}
    try:
        from . import _kernels
    except ImportError:
        pass
    else:
        out["compiled"] = _kernels
    return out
