"""Exact rational LP solving.

The hot pivot kernel has two interchangeable lanes: a compiled Cython
extension (``_kernel_cy``) and a pure-Python fallback (``_kernel_py``).
The compiled lane is preferred when importable; ``BARYLAB_KERNEL=py`` or
``BARYLAB_KERNEL=c`` forces a lane (the latter raises if the extension is
missing).  Both lanes implement the identical deterministic algorithm.
"""

from __future__ import annotations

import os
from types import ModuleType


def _load_kernel() -> tuple[ModuleType, str]:
    forced = os.environ.get("BARYLAB_KERNEL", "").strip().lower()
    if forced == "py":
        from . import _kernel_py

        return _kernel_py, "py"
    try:
        from . import _kernel_cy  # type: ignore[attr-defined]

        return _kernel_cy, "c"
    except ImportError:
        if forced in ("c", "cy"):
            raise
        from . import _kernel_py

        return _kernel_py, "py"


_kernel, _KERNEL_NAME = _load_kernel()


def active_kernel() -> str:
    """Name of the pivot kernel in use: 'c' (compiled) or 'py' (fallback)."""
    return _KERNEL_NAME


from .core import (  # noqa: E402
    KernelCertificateError,
    LinearProgram,
    LpInputError,
    LpOutcome,
    LpStatus,
    solve_lp,
)

__all__ = [
    "KernelCertificateError",
    "LinearProgram",
    "LpInputError",
    "LpOutcome",
    "LpStatus",
    "active_kernel",
    "solve_lp",
]
