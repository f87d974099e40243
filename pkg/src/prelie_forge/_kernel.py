"""Select the term-map kernel backend at import time.

The compiled extension is preferred; the pure-Python twin is used when the
extension is missing or when PRELIE_FORGE_KERNEL=py is set.  Both expose
the same functions, so callers import names from here only.
"""

import os

_choice = os.environ.get("PRELIE_FORGE_KERNEL", "auto").lower()

if _choice not in ("auto", "c", "py"):
    raise ValueError(
        "PRELIE_FORGE_KERNEL must be one of auto/c/py, got %r" % _choice
    )

if _choice == "py":
    from . import _poly_kernel_py as _impl
else:
    try:
        from . import _poly_kernel_c as _impl
    except ImportError:
        if _choice == "c":
            raise
        from . import _poly_kernel_py as _impl

BACKEND = _impl.BACKEND
tm_add = _impl.tm_add
tm_sub = _impl.tm_sub
tm_neg = _impl.tm_neg
tm_mul = _impl.tm_mul
tm_scale = _impl.tm_scale
