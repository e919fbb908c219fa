"""Pure-Python simplex kernels; semantics mirrored by the Cython build."""


def axpy(target, a, source):
    """target[i] += a * source[i], skipping zero source entries."""
    for i, s in enumerate(source):
        if s:
            target[i] = target[i] + a * s


def gather_axpy(target, rows, col, a):
    """target[i] += a * rows[i][col] down a column of a row-major matrix."""
    for i, row in enumerate(rows):
        v = row[col]
        if v:
            target[i] = target[i] + a * v


def sparse_dot(y, entries):
    """Dot of dense y with sparse [(index, value), ...]; 0 when empty."""
    acc = 0
    for i, v in entries:
        yi = y[i]
        if yi:
            acc = acc + yi * v
    return acc


def pivot_update(binv, xb, t, r):
    """Gaussian pivot of the basis inverse and basic solution on row r.

    t is the entering column in the current basis (t[r] is the pivot).
    """
    piv = t[r]
    row_r = binv[r]
    if piv != 1:
        inv = 1 / piv
        for j, v in enumerate(row_r):
            if v:
                row_r[j] = v * inv
        xb[r] = xb[r] * inv
    xbr = xb[r]
    for i, ti in enumerate(t):
        if i == r or not ti:
            continue
        row_i = binv[i]
        for j, v in enumerate(row_r):
            if v:
                row_i[j] = row_i[j] - ti * v
        xb[i] = xb[i] - ti * xbr
