# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the dense polynomial kernels in _pykernels.

Same contracts: little-endian residue vectors, results as tuples. Inputs
outside the fast-path envelope (huge p or degree) are delegated to the
pure implementation, which has no such limits.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc

from scrimkit import _pykernels as _py

# keep len*p*p below 2^62 for the unreduced convolution accumulators
DEF MAX_P = 1 << 21
DEF MAX_LEN = 1 << 16


cdef long long* _to_c(object seq, Py_ssize_t n) except NULL:
    cdef long long* buf = <long long*> PyMem_Malloc(n * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = seq[i]
    return buf


cdef tuple _to_tuple(long long* buf, Py_ssize_t n):
    cdef Py_ssize_t i
    return tuple([buf[i] for i in range(n)])


def mul_mod(a, b, p):
    """Convolution of a and b, coefficients reduced mod p; length na+nb-1."""
    cdef Py_ssize_t na = len(a), nb = len(b)
    if na == 0 or nb == 0:
        return ()
    if p > MAX_P or na + nb > MAX_LEN:
        return _py.mul_mod(a, b, p)
    cdef long long cp = p
    cdef long long* ca = _to_c(a, na)
    cdef long long* cb = NULL
    cdef long long* out = NULL
    cdef Py_ssize_t i, j, no = na + nb - 1
    cdef long long ai
    try:
        cb = _to_c(b, nb)
        out = <long long*> PyMem_Malloc(no * sizeof(long long))
        if out == NULL:
            raise MemoryError()
        for i in range(no):
            out[i] = 0
        for i in range(na):
            ai = ca[i]
            if ai:
                for j in range(nb):
                    out[i + j] += ai * cb[j]
        for i in range(no):
            out[i] %= cp
            if out[i] < 0:
                out[i] += cp
        return _to_tuple(out, no)
    finally:
        PyMem_Free(ca)
        PyMem_Free(cb)
        PyMem_Free(out)


cdef void _rem_inplace(long long* r, Py_ssize_t nr, long long* m,
                       Py_ssize_t dm, long long p) noexcept:
    cdef Py_ssize_t i, j, base
    cdef long long c, v
    for i in range(nr - 1, dm - 1, -1):
        c = r[i] % p
        if c < 0:
            c += p
        if c:
            base = i - dm
            for j in range(dm):
                v = (r[base + j] - c * m[j]) % p
                if v < 0:
                    v += p
                r[base + j] = v
        r[i] = 0


def rem_mod(a, m, p):
    """Remainder of a modulo monic m, padded to fixed width deg(m)."""
    cdef Py_ssize_t na = len(a), nm = len(m), dm = nm - 1
    if p > MAX_P or na > MAX_LEN:
        return _py.rem_mod(a, m, p)
    cdef long long cp = p
    cdef Py_ssize_t width = na if na > dm else dm
    if width == 0:
        return ()
    cdef long long* r = _to_c(a, na)
    cdef long long* cm = NULL
    cdef long long* rr = NULL
    cdef Py_ssize_t i
    try:
        if na < width:
            rr = <long long*> PyMem_Malloc(width * sizeof(long long))
            if rr == NULL:
                raise MemoryError()
            for i in range(na):
                rr[i] = r[i]
            for i in range(na, width):
                rr[i] = 0
            PyMem_Free(r)
            r = rr
            rr = NULL
        cm = _to_c(m, nm)
        _rem_inplace(r, width, cm, dm, cp)
        for i in range(dm):
            r[i] %= cp
            if r[i] < 0:
                r[i] += cp
        return _to_tuple(r, dm)
    finally:
        PyMem_Free(r)
        PyMem_Free(cm)
        PyMem_Free(rr)


def mulrem_mod(a, b, m, p):
    """Fused multiply-then-reduce: rem_mod(mul_mod(a, b), m)."""
    cdef Py_ssize_t na = len(a), nb = len(b), nm = len(m), dm = nm - 1
    if na == 0 or nb == 0:
        return (0,) * dm
    if p > MAX_P or na + nb > MAX_LEN:
        return _py.mulrem_mod(a, b, m, p)
    cdef long long cp = p
    cdef Py_ssize_t no = na + nb - 1
    cdef Py_ssize_t width = no if no > dm else dm
    cdef long long* ca = _to_c(a, na)
    cdef long long* cb = NULL
    cdef long long* cm = NULL
    cdef long long* out = NULL
    cdef Py_ssize_t i, j
    cdef long long ai
    try:
        cb = _to_c(b, nb)
        cm = _to_c(m, nm)
        out = <long long*> PyMem_Malloc(width * sizeof(long long))
        if out == NULL:
            raise MemoryError()
        for i in range(width):
            out[i] = 0
        for i in range(na):
            ai = ca[i]
            if ai:
                for j in range(nb):
                    out[i + j] += ai * cb[j]
        for i in range(no):
            out[i] %= cp
            if out[i] < 0:
                out[i] += cp
        _rem_inplace(out, no, cm, dm, cp)
        return _to_tuple(out, dm)
    finally:
        PyMem_Free(ca)
        PyMem_Free(cb)
        PyMem_Free(cm)
        PyMem_Free(out)


def add_mod(a, b, p):
    """Pointwise sum mod p, padded to the longer input."""
    if len(a) < len(b):
        a, b = b, a
    cdef Py_ssize_t na = len(a), nb = len(b)
    if p > MAX_P or na > MAX_LEN:
        return _py.add_mod(a, b, p)
    cdef long long cp = p
    cdef long long* out = _to_c(a, na)
    cdef Py_ssize_t i
    try:
        for i in range(nb):
            out[i] = (out[i] + b[i]) % cp
        return _to_tuple(out, na)
    finally:
        PyMem_Free(out)


def sub_mod(a, b, p):
    """Pointwise difference mod p, padded to the longer input."""
    cdef Py_ssize_t na = len(a), nb = len(b)
    cdef Py_ssize_t n = na if na > nb else nb
    if p > MAX_P or n > MAX_LEN:
        return _py.sub_mod(a, b, p)
    if n == 0:
        return ()
    cdef long long cp = p
    cdef long long* out = <long long*> PyMem_Malloc(n * sizeof(long long))
    if out == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    cdef long long v
    try:
        for i in range(n):
            v = ((a[i] if i < na else 0) - (b[i] if i < nb else 0)) % cp
            if v < 0:
                v += cp
            out[i] = v
        return _to_tuple(out, n)
    finally:
        PyMem_Free(out)
