"""Select the product kernel at import time.

The compiled extension ``vltwist._ckernel`` is used when it was built; the
pure-Python module is the fallback.  Set ``VLTWIST_PURE_PYTHON=1`` to force
the fallback (the benchmark and the kernel-parity tests do this per process).
"""

from __future__ import annotations

import os

from . import _pykernel

_backend = _pykernel
if os.environ.get("VLTWIST_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernel as _backend  # type: ignore[no-redef]
    except ImportError:
        _backend = _pykernel

IMPLEMENTATION = _backend.IMPLEMENTATION
mul_monomials = _backend.mul_monomials
mul_words = _backend.mul_words
mul_terms = _backend.mul_terms
tensor_mul_terms = _backend.tensor_mul_terms
clear_caches = _backend.clear_caches

__all__ = [
    "IMPLEMENTATION",
    "mul_monomials",
    "mul_words",
    "mul_terms",
    "tensor_mul_terms",
    "clear_caches",
]
