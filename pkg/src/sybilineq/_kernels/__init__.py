"""Measure kernel backend selection.

The hot inner loops (measure evaluations inside falsifier trials and
attack search) are numba-jitted by default. Set ``SYBILINEQ_BACKEND=numpy``
to force the pure-numpy path, or ``SYBILINEQ_BACKEND=numba`` to fail loudly
when numba is unavailable. Both backends stay importable side by side for
equivalence tests and `benchmarks/bench_kernels.py`.
"""

import os

from . import numpy_impl

_requested = os.environ.get("SYBILINEQ_BACKEND", "").strip().lower()

if _requested == "numpy":
    _impl = numpy_impl
elif _requested == "numba":
    from . import numba_impl as _impl
else:
    if _requested:
        raise ValueError(
            f"SYBILINEQ_BACKEND must be 'numba' or 'numpy', got {_requested!r}"
        )
    try:
        from . import numba_impl as _impl
    except ImportError:
        _impl = numpy_impl

BACKEND = _impl.NAME

gini_kernel = _impl.gini_kernel
ge_kernel = _impl.ge_kernel
cv_kernel = _impl.cv_kernel
hhi_kernel = _impl.hhi_kernel
atkinson_kernel = _impl.atkinson_kernel
