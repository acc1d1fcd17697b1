"""Numeric backend selection.

The package ships two interchangeable kernel implementations: a compiled
extension (trimq._kernels) and a pure-Python fallback (trimq._kernels_py).
They are written to agree bit for bit.  The compiled one is preferred when
it imported cleanly; the environment variable TRIMQ_BACKEND overrides:

    TRIMQ_BACKEND=c        require the compiled backend (error if missing)
    TRIMQ_BACKEND=python   force the pure-Python backend

Accepted aliases: "native" for "c"; "py" and "pure" for "python".
"""

import os

_C_IMPORT_ERROR = None
try:
    from . import _kernels as _c_kernels
except ImportError as exc:  # extension not built on this install
    _c_kernels = None
    _C_IMPORT_ERROR = exc

from . import _kernels_py as _py_kernels


def _select():
    choice = os.environ.get("TRIMQ_BACKEND", "").strip().lower()
    if choice in ("", "c", "native"):
        if _c_kernels is not None:
            return _c_kernels, "c"
        if choice:
            raise ImportError(
                "TRIMQ_BACKEND=%s but the compiled backend is not available: %s"
                % (choice, _C_IMPORT_ERROR))
        return _py_kernels, "python"
    if choice in ("python", "py", "pure"):
        return _py_kernels, "python"
    raise ValueError(
        "unrecognized TRIMQ_BACKEND value %r (expected 'c' or 'python')"
        % choice)


kernels, BACKEND = _select()
