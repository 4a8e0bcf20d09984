"""Selects the filtered-counting kernel implementation at import time.

The compiled Cython extension is preferred; the pure-Python twin is used
when the extension is missing or when ``TRITANGENT_PURE_PYTHON`` is set in
the environment.  Both expose the same ``process_sample`` contract, so the
choice only affects throughput, never results.
"""

from __future__ import annotations

import os

from . import _kernel_py

if os.environ.get("TRITANGENT_PURE_PYTHON"):
    _impl = _kernel_py
    HAVE_EXTENSION = False
else:
    try:
        from . import _kernel as _impl  # type: ignore[attr-defined]

        HAVE_EXTENSION = True
    except ImportError:
        _impl = _kernel_py
        HAVE_EXTENSION = False

NAME = _impl.NAME
process_sample = _impl.process_sample

STATUS_NO_REAL = _kernel_py.STATUS_NO_REAL
STATUS_TWO_REAL = _kernel_py.STATUS_TWO_REAL
STATUS_UNCERTAIN = _kernel_py.STATUS_UNCERTAIN


def available_implementations() -> dict:
    """Name -> module map of the kernels importable here (for benchmarks)."""
    impls = {"pure-python": _kernel_py}
    try:
        from . import _kernel  # type: ignore[attr-defined]

        impls["compiled"] = _kernel
    except ImportError:
        pass
    return impls
