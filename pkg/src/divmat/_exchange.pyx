# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled exchange scan.  Semantics mirror ``_exchange_py.scan`` exactly."""
import numpy as np
cimport numpy as cnp

ctypedef cnp.int64_t i64

cdef enum:
    ORDINAL = 0
    MNAT = 1
    MEXCH = 2
    PSEUDO = 3
    PSEUDO_PLUS = 4
    SEMISTRICT = 5


cdef inline i64 _min(i64 a, i64 b) noexcept nogil:
    return a if a < b else b


cdef bint _exchange_ok(int mode, Py_ssize_t j, i64 li, i64 lj, i64 fx, i64 fy,
                       Py_ssize_t a, i64[::1] opts, Py_ssize_t nopt,
                       i64[::1] pos, i64[::1] vals, i64[::1] strides) noexcept nogil:
    cdef i64 low = _min(fx, fy)
    cdef bint up_p = False, up_q = False
    cdef Py_ssize_t k
    cdef i64 b, sb, p, q, vp, vq, m
    if mode == PSEUDO_PLUS:
        for k in range(nopt):
            b = opts[k]
            sb = strides[b] if b >= 0 else 0
            p = pos[li - strides[a] + sb]
            q = pos[lj + strides[a] - sb]
            if p >= 0 and vals[p] > fx:
                up_p = True
            if q >= 0 and vals[q] > fy:
                up_q = True
    for k in range(nopt):
        b = opts[k]
        sb = strides[b] if b >= 0 else 0
        p = pos[li - strides[a] + sb]
        q = pos[lj + strides[a] - sb]
        if mode == ORDINAL:
            if p >= 0 and vals[p] > fx:
                return True
            if q >= 0 and vals[q] > fy:
                return True
            if p >= 0 and q >= 0 and vals[p] == fx and vals[q] == fy:
                return True
            continue
        if p < 0 or q < 0:
            continue
        vp = vals[p]
        vq = vals[q]
        if mode == MNAT or mode == MEXCH:
            if vp + vq >= fx + fy:
                return True
        elif mode == PSEUDO:
            if _min(vp, vq) >= low:
                return True
        elif mode == SEMISTRICT:
            m = _min(vp, vq)
            if m > low or (m == low and (fx == fy or p == j)):
                return True
        else:
            if _min(vp, vq) < low:
                continue
            if fx > vp and fy == vq and not up_q:
                continue
            if fy > vq and fx == vp and not up_p:
                continue
            return True
    return False


def scan(int mode, coords, lin, pos, vals, strides):
    cdef i64[:, ::1] c = np.ascontiguousarray(coords, dtype=np.int64)
    cdef i64[::1] ln = np.ascontiguousarray(lin, dtype=np.int64)
    cdef i64[::1] ps = np.ascontiguousarray(pos, dtype=np.int64)
    cdef i64[::1] vs = np.ascontiguousarray(vals, dtype=np.int64)
    cdef i64[::1] st = np.ascontiguousarray(strides, dtype=np.int64)
    cdef Py_ssize_t n = c.shape[0], d = st.shape[0]
    cdef i64[::1] opts = np.empty(d + 1, dtype=np.int64)
    cdef Py_ssize_t i, j, a, b, nopt
    cdef bint with_empty = mode != MEXCH
    cdef Py_ssize_t fi = -1, fj = -1, fa = -1
    with nogil:
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                nopt = 0
                if with_empty:
                    opts[0] = -1
                    nopt = 1
                for b in range(d):
                    if c[i, b] < c[j, b]:
                        opts[nopt] = b
                        nopt += 1
                for a in range(d):
                    if c[i, a] <= c[j, a]:
                        continue
                    if not _exchange_ok(mode, j, ln[i], ln[j], vs[i], vs[j], a,
                                        opts, nopt, ps, vs, st):
                        fi = i
                        fj = j
                        fa = a
                        break
                if fi >= 0:
                    break
            if fi >= 0:
                break
    if fi < 0:
        return None
    return int(fi), int(fj), int(fa)
