"""Optional numba-compiled kernels for GF(2^64) arithmetic.

Everything here is a speed path: :mod:`dspath.gf2` falls back to a portable
pure-Python implementation when numba is unavailable, and the two paths are
required to agree bit-exactly (see tests).
"""

from __future__ import annotations

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    numba = None
    HAVE_NUMBA = False


if HAVE_NUMBA:
    _u64 = numba.uint64

    @numba.njit(_u64(_u64, _u64), cache=True, inline="always")
    def gf_mul_u64(a, b):
        # Carry-less 64x64 -> 128-bit product, then fold the high word down
        # through x^64 = x^4 + x^3 + x + 1.  Two folds suffice: the first
        # leaves at most 4 high bits.
        lo = _u64(0)
        hi = _u64(0)
        for i in range(64):
            if (b >> _u64(i)) & _u64(1):
                lo ^= a << _u64(i)
                if i > 0:
                    hi ^= a >> _u64(64 - i)
        for _ in range(2):
            new_hi = (hi >> _u64(63)) ^ (hi >> _u64(61)) ^ (hi >> _u64(60))
            lo ^= hi ^ (hi << _u64(1)) ^ (hi << _u64(3)) ^ (hi << _u64(4))
            hi = new_hi
        return lo

    @numba.njit(cache=True)
    def gf_mul_arrays(a, b, out):
        for i in range(a.shape[0]):
            out[i] = gf_mul_u64(a[i], b[i])

else:  # pragma: no cover
    gf_mul_u64 = None
    gf_mul_arrays = None
