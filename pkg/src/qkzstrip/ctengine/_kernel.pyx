# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled capped dense expansion over int64 with overflow detection.

Same contract as ``_kernel_py.expand_dense``; raises OverflowError as soon
as any intermediate coefficient leaves the int64 range, so callers can
rerun the exact object-dtype path.
"""

import numpy as np

cdef extern from *:
    """
    static inline int qkz_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int qkz_add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    """
    int qkz_mul_ovf(long long a, long long b, long long *r) nogil
    int qkz_add_ovf(long long a, long long b, long long *r) nogil


cdef int _apply_term(const long long[::1] src, long long[::1] dst,
                     const int[:, ::1] coords, const int[::1] limit,
                     const int[::1] shift, long long offset, long long coeff) noexcept nogil:
    cdef Py_ssize_t size = src.shape[0]
    cdef Py_ssize_t ndim = coords.shape[1]
    cdef Py_ssize_t c, d
    cdef long long prod, tot
    cdef bint ok
    for c in range(size):
        if src[c] == 0:
            continue
        ok = True
        for d in range(ndim):
            if coords[c, d] + shift[d] > limit[d]:
                ok = False
                break
        if not ok:
            continue
        if qkz_mul_ovf(src[c], coeff, &prod):
            return 1
        if qkz_add_ovf(dst[c + offset], prod, &tot):
            return 1
        dst[c + offset] = tot
    return 0


def expand_dense(dims, factors):
    dims = tuple(int(d) for d in dims)
    cdef Py_ssize_t ndim = len(dims)
    cdef Py_ssize_t size = 1
    for d in dims:
        size *= d
    strides = [0] * ndim
    s = 1
    for d in range(ndim - 1, -1, -1):
        strides[d] = s
        s *= dims[d]
    coords_np = np.ascontiguousarray(
        np.indices(dims, dtype=np.int32).reshape(ndim, size).T
    )
    cdef const int[:, ::1] coords = coords_np
    limit_np = np.array([d - 1 for d in dims], dtype=np.int32)
    cdef const int[::1] limit = limit_np
    acc_np = np.zeros(size, dtype=np.int64)
    acc_np[0] = 1
    cdef long long[::1] acc = acc_np
    cdef long long[::1] out
    cdef const int[::1] sh
    cdef long long offset, coeff
    cdef int failed
    for factor in factors:
        out_np = np.zeros(size, dtype=np.int64)
        out = out_np
        for shift, c in factor:
            if any(x >= dd for x, dd in zip(shift, dims)):
                continue
            sh_np = np.asarray(shift, dtype=np.int32)
            sh = sh_np
            offset = sum(int(x) * st for x, st in zip(shift, strides))
            if not (-(2**63) <= c < 2**63):
                raise OverflowError("factor coefficient exceeds int64")
            coeff = c
            with nogil:
                failed = _apply_term(acc, out, coords, limit, sh, offset, coeff)
            if failed:
                raise OverflowError("int64 overflow in capped expansion")
        acc = out
        acc_np = out_np
    return acc_np.reshape(dims)
