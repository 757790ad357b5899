# cython: language_level=3
# cython: overflowcheck=True
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled kernel for the factor-search hot loops, on signed 64-bit values.

Interface and semantics mirror _kernel_py exactly.  Arithmetic is overflow
checked, so a value outgrowing 64 bits raises OverflowError; the dispatcher
in ``kernel`` catches that and reruns the call on the pure-Python twin.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc


cdef long long* _to_c(list xs) except NULL:
    cdef Py_ssize_t n = len(xs)
    cdef long long* buf = <long long*> PyMem_Malloc(max(n, 1) * sizeof(long long))
    cdef Py_ssize_t i
    if buf == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            buf[i] = xs[i]
    except BaseException:
        PyMem_Free(buf)
        raise
    return buf


def mul_dense(list a, list b):
    """Product of two dense ascending coefficient lists."""
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    if na == 0 or nb == 0:
        return []
    cdef long long* ca = _to_c(a)
    cdef long long* cb = NULL
    cdef long long* out = NULL
    cdef long long v
    try:
        cb = _to_c(b)
        out = <long long*> PyMem_Malloc((na + nb - 1) * sizeof(long long))
        if out == NULL:
            raise MemoryError()
        for i in range(na + nb - 1):
            out[i] = 0
        for i in range(na):
            if ca[i] == 0:
                continue
            for j in range(nb):
                v = out[i + j] + ca[i] * cb[j]
                out[i + j] = v
        return [out[i] for i in range(na + nb - 1)]
    finally:
        PyMem_Free(ca)
        PyMem_Free(cb)
        PyMem_Free(out)


def eval_dense(list coeffs, long long t):
    """Horner evaluation of a dense ascending coefficient list."""
    cdef long long val = 0
    cdef Py_ssize_t i
    cdef long long c
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        val = val * t + c
    return val


cdef int _div_exact(long long* p, Py_ssize_t dp, long long* q, Py_ssize_t dq,
                    long long* r, long long* out) except -1:
    cdef Py_ssize_t i, k
    cdef long long c, f, qlead
    if dp < dq:
        return 0
    qlead = q[dq]
    for i in range(dp + 1):
        r[i] = p[i]
    for i in range(dp - dq, -1, -1):
        c = r[i + dq]
        if c == 0:
            out[i] = 0
            continue
        if c % qlead != 0 or c < 0:
            return 0
        f = c // qlead
        out[i] = f
        for k in range(dq + 1):
            r[i + k] = r[i + k] - f * q[k]
    for i in range(dq):
        if r[i] != 0:
            return 0
    return 1


def div_exact_dense(list p, list q):
    """Quotient r with q * r == p and r nonnegative, as a list, else None."""
    cdef Py_ssize_t dp = len(p) - 1, dq = len(q) - 1, i
    if dp < dq:
        return None
    cdef long long* cp = _to_c(p)
    cdef long long* cq = NULL
    cdef long long* r = NULL
    cdef long long* out = NULL
    try:
        cq = _to_c(q)
        r = <long long*> PyMem_Malloc((dp + 1) * sizeof(long long))
        out = <long long*> PyMem_Malloc((dp - dq + 1) * sizeof(long long))
        if r == NULL or out == NULL:
            raise MemoryError()
        if _div_exact(cp, dp, cq, dq, r, out):
            return [out[i] for i in range(dp - dq + 1)]
        return None
    finally:
        PyMem_Free(cp)
        PyMem_Free(cq)
        PyMem_Free(r)
        PyMem_Free(out)


def kron_degree_search(list core, int d, list divisor_lists, list lag,
                       long long scale, long long budget):
    """Try every divisor tuple for one candidate factor degree.

    Same contract as _kernel_py.kron_degree_search: returns
    (found, used, completed).
    """
    cdef Py_ssize_t nc = len(core)
    cdef int np1 = d + 1
    cdef Py_ssize_t i, j, pos
    sizes = [len(lst) for lst in divisor_lists]
    for s in sizes:
        if s == 0:
            return [], 0, True
    cdef Py_ssize_t total = 0
    for s in sizes:
        total += s
    flat = []
    off_py = [0]
    for lst in divisor_lists:
        flat.extend(lst)
        off_py.append(len(flat))
    lag_flat = []
    for row in lag:
        lag_flat.extend(row)

    cdef long long* ccore = _to_c(core)
    cdef long long* cdivs = NULL
    cdef long long* clag = NULL
    cdef Py_ssize_t* off = NULL
    cdef Py_ssize_t* idx = NULL
    cdef Py_ssize_t* csizes = NULL
    cdef long long* cand = NULL
    cdef long long* rbuf = NULL
    cdef long long* obuf = NULL
    cdef long long used = 0
    cdef long long u, c
    cdef bint ok, completed = True
    found = []
    try:
        cdivs = _to_c(flat)
        clag = _to_c(lag_flat)
        off = <Py_ssize_t*> PyMem_Malloc((np1 + 1) * sizeof(Py_ssize_t))
        idx = <Py_ssize_t*> PyMem_Malloc(np1 * sizeof(Py_ssize_t))
        csizes = <Py_ssize_t*> PyMem_Malloc(np1 * sizeof(Py_ssize_t))
        cand = <long long*> PyMem_Malloc(np1 * sizeof(long long))
        rbuf = <long long*> PyMem_Malloc(nc * sizeof(long long))
        obuf = <long long*> PyMem_Malloc((nc - d) * sizeof(long long))
        if (off == NULL or idx == NULL or csizes == NULL or cand == NULL
                or rbuf == NULL or obuf == NULL):
            raise MemoryError()
        for i in range(np1 + 1):
            off[i] = off_py[i]
        for i in range(np1):
            idx[i] = 0
            csizes[i] = sizes[i]
        while True:
            if used >= budget:
                completed = False
                break
            used += 1
            ok = True
            for i in range(np1):
                u = 0
                for j in range(np1):
                    u = u + cdivs[off[j] + idx[j]] * clag[j * np1 + i]
                if u % scale != 0 or u // scale < 0:
                    ok = False
                    break
                cand[i] = u // scale
            if ok and cand[d] != 0:
                if _div_exact(ccore, nc - 1, cand, d, rbuf, obuf):
                    found.append(
                        ([cand[i] for i in range(np1)],
                         [obuf[i] for i in range(nc - d)])
                    )
            pos = np1 - 1
            while pos >= 0:
                idx[pos] += 1
                if idx[pos] < csizes[pos]:
                    break
                idx[pos] = 0
                pos -= 1
            if pos < 0:
                break
        return found, used, completed
    finally:
        PyMem_Free(ccore)
        PyMem_Free(cdivs)
        PyMem_Free(clag)
        PyMem_Free(off)
        PyMem_Free(idx)
        PyMem_Free(csizes)
        PyMem_Free(cand)
        PyMem_Free(rbuf)
        PyMem_Free(obuf)
