"""Backend selection for the modular-coefficient kernels.

The environment flag REGULUS_BACKEND picks the implementation:

    REGULUS_BACKEND=numba   force the jitted kernels (error if numba missing)
    REGULUS_BACKEND=numpy   force the pure-numpy fallback
    REGULUS_BACKEND=auto    numba if importable, else numpy  (default)

Resolution is lazy: exact-integer work never touches numba, and the first
modular operation pays the one-time JIT cost (cached on disk by numba).
"""

from __future__ import annotations

import os
import warnings

_ENV_VAR = "REGULUS_BACKEND"
_kernels = None
_name = None


def _resolve():
    global _kernels, _name
    choice = os.environ.get(_ENV_VAR, "auto").strip().lower()
    if choice not in ("auto", "numba", "numpy"):
        raise ValueError(f"{_ENV_VAR} must be 'auto', 'numba' or 'numpy', got {choice!r}")
    if choice == "numpy":
        from . import _kernels_numpy as k
    elif choice == "numba":
        from . import _kernels_numba as k
    else:
        try:
            from . import _kernels_numba as k
        except ImportError:
            warnings.warn("numba unavailable; using the pure-numpy kernel fallback",
                          RuntimeWarning, stacklevel=3)
            from . import _kernels_numpy as k
    _kernels = k
    _name = k.BACKEND_NAME


def kernels():
    """The active kernel module (resolved on first use)."""
    if _kernels is None:
        _resolve()
    return _kernels


def active_backend() -> str:
    """Name of the active backend: 'numba' or 'numpy'."""
    if _kernels is None:
        _resolve()
    return _name
