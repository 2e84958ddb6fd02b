"""Backend selection for the summation kernels.

The compiled extension is preferred when present; the numpy implementation
is the fallback.  BERNDT_LAB_PURE_PYTHON=1 forces the fallback (used by the
benchmark and by tests that compare the two backends).
"""

import os

from . import _py

if os.environ.get("BERNDT_LAB_PURE_PYTHON") == "1":
    _impl = _py
    BACKEND = "python"
else:
    try:
        from . import _core as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _py
        BACKEND = "python"

rect_sum = _impl.rect_sum
eis_partials = _impl.eis_partials
quad1_sum = _impl.quad1_sum
arctan_partials = _impl.arctan_partials
