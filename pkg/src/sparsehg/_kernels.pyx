# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled subset-check kernels.

Twin of `sparsehg._kernels_py` restricted to hosts with at most 64
vertices (one machine word per subset). Must return bit-identical
results to the fallback; the dispatcher picks whichever is available.
"""

from libc.stdlib cimport free, malloc

ctypedef unsigned long long u64

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #define SHG_POPCOUNT(x) __builtin_popcountll(x)
    #else
    static int SHG_POPCOUNT(unsigned long long x) {
        int c = 0;
        while (x) { x &= x - 1; c++; }
        return c;
    }
    #endif
    """
    int SHG_POPCOUNT(u64 x) nogil

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15

cdef u64 _GAMMA = <u64>0x9E3779B97F4A7C15


cdef inline u64 _mix(u64 z) nogil:
    z ^= z >> 30
    z *= <u64>0xBF58476D1CE4E5B9
    z ^= z >> 27
    z *= <u64>0x94D049BB133111EB
    z ^= z >> 31
    return z


def mix64(x):
    """Scalar splitmix64 finalizer; parity hook for the fallback."""
    return _mix(<u64>(x & 0xFFFFFFFFFFFFFFFF))


cdef u64* _as_u64_array(object seq, Py_ssize_t* count) except NULL:
    cdef Py_ssize_t m = len(seq)
    cdef u64* out = <u64*>malloc((m if m > 0 else 1) * sizeof(u64))
    if out == NULL:
        raise MemoryError()
    cdef Py_ssize_t j
    try:
        for j in range(m):
            out[j] = <u64>seq[j]
    except BaseException:
        free(out)
        raise
    count[0] = m
    return out


cdef long* _as_long_array(object seq, Py_ssize_t* count) except NULL:
    cdef Py_ssize_t m = len(seq)
    cdef long* out = <long*>malloc((m if m > 0 else 1) * sizeof(long))
    if out == NULL:
        raise MemoryError()
    cdef Py_ssize_t j
    try:
        for j in range(m):
            out[j] = <long>seq[j]
    except BaseException:
        free(out)
        raise
    count[0] = m
    return out


def induced_count(edge_masks, mask):
    cdef Py_ssize_t ne = 0
    cdef u64* em = _as_u64_array(edge_masks, &ne)
    cdef u64 u = <u64>mask
    cdef Py_ssize_t j
    cdef long long total = 0
    with nogil:
        for j in range(ne):
            if (u & em[j]) == em[j]:
                total += 1
    free(em)
    return int(total)


# -- niceness conditions ------------------------------------------------------


cdef inline int _nice_hit(u64* em, Py_ssize_t ne, u64 a, long long k, u64 u,
                          long long* d_out, long long* bound_out) nogil:
    cdef long long eu = 0, d, au, bound
    cdef Py_ssize_t j
    for j in range(ne):
        if (u & em[j]) == em[j]:
            eu += 1
    d = SHG_POPCOUNT(u) - eu
    au = SHG_POPCOUNT(u & a)
    bound = au - (1 if (u & a) == a else 0)
    if d < bound:
        d_out[0] = d
        bound_out[0] = bound
        return 1
    if au <= k - 1 and (u & ~a) != 0 and d < au + 1:
        d_out[0] = d
        bound_out[0] = au + 1
        return 2
    return 0


def nice_scan_range(edge_masks, int n, a_mask, long long k, start, stop):
    if n > 64:
        raise ValueError("compiled kernel is limited to 64 vertices")
    cdef Py_ssize_t ne = 0
    cdef u64* em = _as_u64_array(edge_masks, &ne)
    cdef u64 a = <u64>a_mask
    cdef u64 lo = <u64>start, hi = <u64>stop, u = 0
    cdef long long d = 0, bound = 0
    cdef int code = 0
    with nogil:
        u = lo
        while u < hi:
            code = _nice_hit(em, ne, a, k, u, &d, &bound)
            if code != 0:
                break
            u += 1
    free(em)
    if code != 0:
        return (int(u - lo + 1), (int(u), int(u), code, int(d), int(bound)))
    return (int(hi - lo), None)


def nice_check_masks(edge_masks, int n, a_mask, long long k, masks):
    if n > 64:
        raise ValueError("compiled kernel is limited to 64 vertices")
    cdef Py_ssize_t ne = 0, nm = 0
    cdef u64* em = _as_u64_array(edge_masks, &ne)
    cdef u64* um
    try:
        um = _as_u64_array(masks, &nm)
    except BaseException:
        free(em)
        raise
    cdef u64 a = <u64>a_mask
    cdef long long d = 0, bound = 0
    cdef int code = 0
    cdef Py_ssize_t i = 0
    with nogil:
        for i in range(nm):
            code = _nice_hit(em, ne, a, k, um[i], &d, &bound)
            if code != 0:
                break
    cdef u64 found_u = um[i] if code != 0 else 0
    free(em)
    free(um)
    if code != 0:
        return (int(i + 1), (int(i), int(found_u), code, int(d), int(bound)))
    return (int(nm), None)


def nice_sample_scan(edge_masks, int n, a_mask, long long k, samples, seed,
                     index_offset=0):
    if n > 64:
        raise ValueError("compiled kernel is limited to 64 vertices")
    cdef Py_ssize_t ne = 0
    cdef u64* em = _as_u64_array(edge_masks, &ne)
    cdef u64 a = <u64>a_mask
    cdef u64 seed_u = <u64>(seed & 0xFFFFFFFFFFFFFFFF)
    cdef u64 nmask = (<u64>0xFFFFFFFFFFFFFFFF) if n == 64 else ((<u64>1 << n) - 1)
    cdef u64 off = <u64>index_offset
    cdef u64 total = <u64>samples
    cdef u64 i = 0, u = 0
    cdef long long d = 0, bound = 0
    cdef int code = 0
    with nogil:
        for i in range(total):
            u = _mix(seed_u + (off + i + 1) * _GAMMA) & nmask
            code = _nice_hit(em, ne, a, k, u, &d, &bound)
            if code != 0:
                break
    free(em)
    if code != 0:
        return (int(i + 1), (int(off + i), int(u), code, int(d), int(bound)))
    return (int(total), None)


# -- conditional bounds for tower graphs --------------------------------------


cdef inline int _gl_hit(u64* em, Py_ssize_t ne, u64 x, u64 aell, u64 xy,
                        u64 gl, long long k, long long ell, u64 u,
                        long long* d_out, long long* bound_out) nogil:
    cdef long long eu = 0, d, au, xu
    cdef Py_ssize_t j
    for j in range(ne):
        if (u & em[j]) == em[j]:
            eu += 1
    d = SHG_POPCOUNT(u) - eu
    au = SHG_POPCOUNT(u & aell)
    xu = SHG_POPCOUNT(u & x)
    cdef long long bound = au - (1 if (u & xy) == xy else 0)
    if d < bound:
        d_out[0] = d
        bound_out[0] = bound
        return 1
    if xu <= k - 2 and (u & ~aell) != 0 and d < au + 1:
        d_out[0] = d
        bound_out[0] = au + 1
        return 2
    if xu >= k - 1 and (u & gl & ~x) != 0 and d < k + ell:
        d_out[0] = d
        bound_out[0] = k + ell
        return 3
    return 0


def gl_scan_range(edge_masks, free_positions, base_mask, x_mask, aell_mask,
                  xy_mask, gl_mask, long long k, long long ell, start, stop):
    cdef Py_ssize_t ne = 0, nf = 0
    cdef u64* em = _as_u64_array(edge_masks, &ne)
    cdef long* fp
    try:
        fp = _as_long_array(free_positions, &nf)
    except BaseException:
        free(em)
        raise
    cdef u64 base = <u64>base_mask
    cdef u64 x = <u64>x_mask, aell = <u64>aell_mask
    cdef u64 xy = <u64>xy_mask, gl = <u64>gl_mask
    cdef u64 lo = <u64>start, hi = <u64>stop
    cdef u64 i = 0, u = 0
    cdef Py_ssize_t b
    cdef long long d = 0, bound = 0
    cdef int code = 0
    with nogil:
        i = lo
        while i < hi:
            u = base
            for b in range(nf):
                if (i >> b) & 1:
                    u |= (<u64>1) << fp[b]
            code = _gl_hit(em, ne, x, aell, xy, gl, k, ell, u, &d, &bound)
            if code != 0:
                break
            i += 1
    free(em)
    free(fp)
    if code != 0:
        return (int(i - lo + 1), (int(i), int(u), code, int(d), int(bound)))
    return (int(hi - lo), None)


def gl_check_masks(edge_masks, int n, x_mask, aell_mask, xy_mask, gl_mask,
                   long long k, long long ell, masks):
    if n > 64:
        raise ValueError("compiled kernel is limited to 64 vertices")
    cdef Py_ssize_t ne = 0, nm = 0
    cdef u64* em = _as_u64_array(edge_masks, &ne)
    cdef u64* um
    try:
        um = _as_u64_array(masks, &nm)
    except BaseException:
        free(em)
        raise
    cdef u64 x = <u64>x_mask, aell = <u64>aell_mask
    cdef u64 xy = <u64>xy_mask, gl = <u64>gl_mask
    cdef long long d = 0, bound = 0
    cdef int code = 0
    cdef Py_ssize_t i = 0
    with nogil:
        for i in range(nm):
            code = _gl_hit(em, ne, x, aell, xy, gl, k, ell, um[i], &d, &bound)
            if code != 0:
                break
    cdef u64 found_u = um[i] if code != 0 else 0
    free(em)
    free(um)
    if code != 0:
        return (int(i + 1), (int(i), int(found_u), code, int(d), int(bound)))
    return (int(nm), None)


def gl_sample_scan(edge_masks, int n, yprefix_mask, x_mask, aell_mask, xy_mask,
                   gl_mask, long long k, long long ell, samples, seed,
                   index_offset=0):
    if n > 64:
        raise ValueError("compiled kernel is limited to 64 vertices")
    cdef Py_ssize_t ne = 0
    cdef u64* em = _as_u64_array(edge_masks, &ne)
    cdef u64 ypre = <u64>yprefix_mask
    cdef u64 x = <u64>x_mask, aell = <u64>aell_mask
    cdef u64 xy = <u64>xy_mask, gl = <u64>gl_mask
    cdef u64 seed_u = <u64>(seed & 0xFFFFFFFFFFFFFFFF)
    cdef u64 nmask = (<u64>0xFFFFFFFFFFFFFFFF) if n == 64 else ((<u64>1 << n) - 1)
    cdef u64 off = <u64>index_offset
    cdef u64 total = <u64>samples
    cdef u64 i = 0, u = 0
    cdef long long d = 0, bound = 0
    cdef int code = 0
    with nogil:
        for i in range(total):
            u = (_mix(seed_u + (off + i + 1) * _GAMMA) & nmask) | ypre
            code = _gl_hit(em, ne, x, aell, xy, gl, k, ell, u, &d, &bound)
            if code != 0:
                break
    free(em)
    if code != 0:
        return (int(i + 1), (int(off + i), int(u), code, int(d), int(bound)))
    return (int(total), None)
