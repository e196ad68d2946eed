"""Backend selection for the hot loops.

The compiled extension is used when it was built; otherwise the pure-Python
module is loaded.  Set ``MNCONVEX_PURE=1`` to force the fallback.
"""

import os

from . import _pykernels as pure

if os.environ.get("MNCONVEX_PURE", "") not in ("", "0"):
    _impl = pure
    BACKEND = "python"
else:
    try:
        from . import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = pure
        BACKEND = "python"

series_sum = _impl.series_sum
horner_many = _impl.horner_many
monotone_scan = _impl.monotone_scan
agm_many = _impl.agm_many

CONVERGED = pure.CONVERGED
EXHAUSTED = pure.EXHAUSTED
NONFINITE = pure.NONFINITE
CONSTANT = pure.CONSTANT
INCREASING = pure.INCREASING
DECREASING = pure.DECREASING
NOT_MONOTONE = pure.NOT_MONOTONE

__all__ = [
    "BACKEND", "series_sum", "horner_many", "monotone_scan", "agm_many", "pure",
]
