"""Small exact linear algebra kernel: rational solves, integer kernels,
and Smith normal form with a column transform, all over Python ints and
Fractions.  Matrices are lists of row tuples/lists."""

from fractions import Fraction
from math import gcd


def solve_rational(rows, rhs):
    """Solve sum_j x_j * rows[j] = rhs over the rationals.

    Returns the coefficient list, or None if rhs is not in the row span.
    If the rows are dependent, an arbitrary consistent solution is returned.
    """
    k = len(rows)
    if k == 0:
        return [] if not any(rhs) else None
    m = len(rows[0])
    # augmented system A^T x = rhs
    aug = [[Fraction(rows[j][i]) for j in range(k)] + [Fraction(rhs[i])] for i in range(m)]
    pivots = []
    row = 0
    for col in range(k):
        piv = next((i for i in range(row, m) if aug[i][col] != 0), None)
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        pv = aug[row][col]
        aug[row] = [x / pv for x in aug[row]]
        for i in range(m):
            if i != row and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[row])]
        pivots.append(col)
        row += 1
        if row == m:
            break
    for i in range(row, m):
        if aug[i][k] != 0:
            return None
    sol = [Fraction(0)] * k
    for i, col in enumerate(pivots):
        sol[col] = aug[i][k]
    return sol


def integer_kernel(rows):
    """Basis of the left-kernel {x integer : x * M = 0} of the matrix whose
    rows are ``rows``... computed as the integer kernel of the column span.

    Concretely: returns integer vectors f (length = row length) with
    f . r = 0 for every row r, in Hermite-reduced form with positive pivots.
    """
    if not rows:
        return []
    m = len(rows[0])
    # kernel of the linear map f -> (f . r_i): SNF of the m x k matrix M^T
    mat = [[rows[j][i] for j in range(len(rows))] for i in range(m)]
    d, v = smith_normal_form(mat)
    rank = sum(1 for i in range(min(len(d), len(d[0]) if d else 0)) if d[i][i] != 0)
    # kernel rows of M^T: last m - rank rows of V^{-1}?  We use the transform
    # on the left instead: redo with rows as unknown combinations.
    return _row_kernel(mat)


def _row_kernel(mat):
    """Integer basis of {x : x * mat = 0}, Hermite-reduced, positive pivots."""
    m = len(mat)
    if m == 0:
        return []
    k = len(mat[0])
    # [mat | I] row reduction over Z (fraction-free via gcd steps)
    work = [list(mat[i]) + [1 if j == i else 0 for j in range(m)] for i in range(m)]
    row = 0
    for col in range(k):
        piv = None
        for i in range(row, m):
            if work[i][col] != 0 and (piv is None or abs(work[i][col]) < abs(work[piv][col])):
                piv = i
        if piv is None:
            continue
        work[row], work[piv] = work[piv], work[row]
        changed = True
        while changed:
            changed = False
            for i in range(row + 1, m):
                if work[i][col] != 0:
                    q = work[i][col] // work[row][col]
                    work[i] = [a - q * b for a, b in zip(work[i], work[row])]
                    if work[i][col] != 0:
                        work[row], work[i] = work[i], work[row]
                        changed = True
        row += 1
        if row == m:
            break
    kernel = [w[k:] for w in work[row:]]
    return _hermite_reduce(kernel)


def _hermite_reduce(rows):
    """Row-style Hermite normal form with positive pivots (for determinism)."""
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return []
    m = len(rows[0])
    out = []
    work = rows
    col = 0
    while work and col < m:
        cand = [r for r in work if r[col] != 0]
        if not cand:
            col += 1
            continue
        while True:
            cand.sort(key=lambda r: abs(r[col]))
            piv = cand[0]
            done = True
            for r in cand[1:]:
                q = r[col] // piv[col]
                nr = [a - q * b for a, b in zip(r, piv)]
                r[:] = nr
                if r[col] != 0:
                    done = False
            cand = [r for r in cand if r[col] != 0] or [piv]
            if done or len(cand) == 1:
                break
        piv = cand[0]
        if piv[col] < 0:
            piv = [-a for a in piv]
        for prev in out:
            pass
        out.append(piv)
        rest = [r for r in work if r is not piv and not _same(r, piv)]
        # eliminate this column from the rest
        nrest = []
        for r in rest:
            if r[col] != 0:
                q = r[col] // piv[col]
                r = [a - q * b for a, b in zip(r, piv)]
            if any(r):
                nrest.append(list(r))
        work = nrest
        col += 1
    # reduce entries above pivots
    for i in reversed(range(len(out))):
        pcol = next(j for j, a in enumerate(out[i]) if a != 0)
        for j in range(i):
            q = out[j][pcol] // out[i][pcol]
            if q:
                out[j] = [a - q * b for a, b in zip(out[j], out[i])]
    return [tuple(r) for r in out]


def _same(a, b):
    return all(x == y for x, y in zip(a, b))


def smith_normal_form(mat):
    """Smith normal form of an integer matrix.

    Returns (diag, V) where diag is the list of invariant factors (including
    zeros up to min(k, m)) and V is the unimodular m x m column transform
    with U * mat * V diagonal for some unimodular U.  Row space of mat over
    the integers equals span{diag[i] * row_i(V^{-1})}.
    """
    a = [list(r) for r in mat]
    k = len(a)
    m = len(a[0]) if k else 0
    v = [[1 if i == j else 0 for j in range(m)] for i in range(m)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        v[i], v[j] = v[j], v[i]

    def add_row(i, j, q):  # row_i -= q * row_j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]

    def add_col(i, j, q):  # col_i -= q * col_j
        for r in a:
            r[i] -= q * r[j]
        v[i] = [x - q * y for x, y in zip(v[i], v[j])]

    t = 0
    while t < min(k, m):
        # find a nonzero pivot in the remaining block
        piv = None
        for i in range(t, k):
            for j in range(t, m):
                if a[i][j] != 0 and (piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            # clear column t
            dirty = False
            for i in range(t + 1, k):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    add_row(i, t, q)
                    if a[i][t] != 0:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, m):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    add_col(j, t, q)
                    if a[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
            if not dirty and all(a[i][t] == 0 for i in range(t + 1, k)) \
                    and all(a[t][j] == 0 for j in range(t + 1, m)):
                break
        # divisibility fix-up: pivot must divide the remaining block
        entry = None
        for i in range(t + 1, k):
            for j in range(t + 1, m):
                if a[i][j] % a[t][t] != 0:
                    entry = (i, j)
                    break
            if entry:
                break
        if entry:
            add_row(t, entry[0], -1)  # row_t += row_i
            continue
        if a[t][t] < 0:
            for r in a:
                r[t] = -r[t]
            v[t] = [-x for x in v[t]]
        t += 1
    diag = [a[i][i] if i < m else 0 for i in range(min(k, m))]
    # note: columns of the work matrix were transformed; v rows track columns
    v_mat = [[v[j][i] for j in range(m)] for i in range(m)]
    return diag, v_mat


def invert_unimodular(v):
    """Exact inverse of an integer matrix with determinant +-1."""
    m = len(v)
    aug = [[Fraction(v[i][j]) for j in range(m)] + [Fraction(1 if j == i else 0) for j in range(m)]
           for i in range(m)]
    for col in range(m):
        piv = next(i for i in range(col, m) if aug[i][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for i in range(m):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    out = []
    for i in range(m):
        row = []
        for j in range(m):
            x = aug[i][m + j]
            assert x.denominator == 1
            row.append(int(x))
        out.append(tuple(row))
    return out


def primitive(vec):
    """Divide an integer vector by the gcd of its entries; fix leading sign > 0."""
    g = 0
    for c in vec:
        g = gcd(g, abs(c))
    if g == 0:
        return tuple(vec)
    out = [c // g for c in vec]
    lead = next((c for c in out if c != 0), 0)
    if lead < 0:
        out = [-c for c in out]
    return tuple(out)
