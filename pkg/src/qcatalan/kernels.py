"""Backend selection for the hot kernels.

The compiled ``_kernels`` extension is used when it imports; otherwise, or
when ``QCATALAN_PURE_PYTHON`` is set to a non-empty value other than ``0``,
the pure-Python twin is used.
"""

import os

from . import _kernels_py

if os.environ.get("QCATALAN_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        _impl = _kernels_py

BACKEND = "python" if _impl is _kernels_py else "cython"

contains_pattern = _impl.contains_pattern
ends_with_pattern = _impl.ends_with_pattern
inversions = _impl.inversions
inversions_by_residue = _impl.inversions_by_residue
word_inversions = _impl.word_inversions
path_area = _impl.path_area


def backends():
    """Map of available backend name to module, for benchmarks and twin tests."""
    out = {"python": _kernels_py}
    try:
        from . import _kernels
    except ImportError:
        pass
    else:
        out["cython"] = _kernels
    return out
