"""Hot arithmetic kernels with a selectable backend.

``SIGGB_BACKEND=numpy`` forces the pure-numpy path; the default uses numba
when it imports.  The choice is fixed at import time.
"""
import os

from . import _numpy

BACKEND = os.environ.get("SIGGB_BACKEND", "numba").strip().lower()
if BACKEND not in ("numba", "numpy"):
    raise ImportError(f"SIGGB_BACKEND must be 'numba' or 'numpy', got {BACKEND!r}")

if BACKEND == "numba":
    try:
        from . import _numba as _impl
    except ImportError:  # pragma: no cover - numba missing
        BACKEND = "numpy"
        _impl = _numpy
else:
    _impl = _numpy

cmp_rows = _impl.cmp_rows
dmask = _impl.dmask
sub_mul = _impl.sub_mul
mul_term = _impl.mul_term
find_divisor = _impl.find_divisor
divisor_mask = _impl.divisor_mask
find_sig_reducer = _impl.find_sig_reducer
sig_reduce = _impl.sig_reduce
normal_form = _impl.normal_form
pair_candidates = _impl.pair_candidates

# not hot; always numpy
sort_combine = _numpy.sort_combine
cmp_many = _numpy.cmp_many

__all__ = [
    "BACKEND", "cmp_rows", "dmask", "sub_mul", "mul_term", "find_divisor",
    "divisor_mask", "find_sig_reducer", "sig_reduce", "normal_form",
    "pair_candidates", "sort_combine", "cmp_many",
]
