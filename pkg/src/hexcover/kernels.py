"""Kernel dispatch: the compiled extension when importable, else pure Python.

Set ``HEXCOVER_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py

IMPLEMENTATION = "python"
_impl = _kernels_py

if os.environ.get("HEXCOVER_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]

        IMPLEMENTATION = "compiled"
    except ImportError:  # extension not built
        _impl = _kernels_py

canon_label = _impl.canon_label
exact_cover2 = _impl.exact_cover2
ham_cycles = _impl.ham_cycles
