"""Kernel backend selection.

RPACLONE_BACKEND=numpy forces the pure numpy/Python fallback;
RPACLONE_BACKEND=numba requires numba and fails loudly if missing.
Default: numba when importable, numpy otherwise.
"""

from __future__ import annotations

import os
from types import ModuleType

_ENV_VAR = "RPACLONE_BACKEND"


def _load(name: str) -> ModuleType:
    if name == "numba":
        from . import _kernels_numba

        return _kernels_numba
    if name == "numpy":
        from . import _kernels_numpy

        return _kernels_numpy
    raise ValueError(f"unknown kernel backend {name!r} (expected 'numba' or 'numpy')")


def select_backend() -> ModuleType:
    requested = os.environ.get(_ENV_VAR, "").strip().lower()
    if requested:
        return _load(requested)
    try:
        return _load("numba")
    except ImportError:
        return _load("numpy")


_kernels = select_backend()


def get_kernels() -> ModuleType:
    return _kernels


def backend_name() -> str:
    return "numba" if _kernels.__name__.endswith("numba") else "numpy"
