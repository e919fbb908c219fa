# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled simplex kernels.

Scalars stay arbitrary exact-rational Python objects (Fraction or gmpy2.mpq);
the win over `pure` is C-level loop and indexing overhead, not arithmetic.
"""


def axpy(list target, object a, list source):
    cdef Py_ssize_t i, n = len(source)
    cdef object s
    for i in range(n):
        s = source[i]
        if s:
            target[i] = target[i] + a * s


def gather_axpy(list target, list rows, Py_ssize_t col, object a):
    cdef Py_ssize_t i, n = len(rows)
    cdef list row
    cdef object v
    for i in range(n):
        row = <list> rows[i]
        v = row[col]
        if v:
            target[i] = target[i] + a * v


def sparse_dot(list y, list entries):
    cdef object acc = 0
    cdef object yi, v
    cdef Py_ssize_t i
    cdef tuple pair
    for pair in entries:
        i = <Py_ssize_t> pair[0]
        yi = y[i]
        if yi:
            acc = acc + yi * pair[1]
    return acc


def pivot_update(list binv, list xb, list t, Py_ssize_t r):
    cdef Py_ssize_t i, j, n = len(binv)
    cdef list row_r = <list> binv[r]
    cdef Py_ssize_t w = len(row_r)
    cdef list row_i
    cdef object piv = t[r]
    cdef object inv, v, ti, xbr
    if piv != 1:
        inv = 1 / piv
        for j in range(w):
            v = row_r[j]
            if v:
                row_r[j] = v * inv
        xb[r] = xb[r] * inv
    xbr = xb[r]
    for i in range(n):
        if i == r:
            continue
        ti = t[i]
        if ti:
            row_i = <list> binv[i]
            for j in range(w):
                v = row_r[j]
                if v:
                    row_i[j] = row_i[j] - ti * v
            xb[i] = xb[i] - ti * xbr
