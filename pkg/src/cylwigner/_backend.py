"""Import-time selection of the kernel backend.

The compiled extension is preferred when present; the pure-NumPy module is
the fallback.  Set ``CYLWIGNER_BACKEND=python`` (or ``cython``) to force a
choice, e.g. for benchmarking the two implementations against each other.
"""

from __future__ import annotations

import os

_requested = os.environ.get("CYLWIGNER_BACKEND", "auto").strip().lower()

if _requested in ("auto", ""):
    try:
        from . import _kernels_cy as kernels  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import _kernels_py as kernels

        BACKEND = "python"
elif _requested == "python":
    from . import _kernels_py as kernels

    BACKEND = "python"
elif _requested in ("cython", "compiled"):
    from . import _kernels_cy as kernels  # type: ignore[attr-defined]

    BACKEND = "cython"
else:
    raise ImportError(
        f"unknown CYLWIGNER_BACKEND value {_requested!r}; "
        "expected 'auto', 'python' or 'cython'"
    )
