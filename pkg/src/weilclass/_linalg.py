"""Small exact linear algebra: HNF lattice bases, kernels mod p, determinants.

Matrices are lists of row lists of ints.  Row-vector convention throughout:
a linear map sends the row v to v @ M, so "kernel" means the left kernel.
Sizes here are tiny (n <= 10), so clarity beats asymptotics.
"""

from __future__ import annotations

from fractions import Fraction


def hnf(mat, n):
    """Canonical row Hermite normal form of the lattice spanned by the rows.

    Returns rows with strictly increasing pivot columns, positive pivots, and
    entries above each pivot reduced into [0, pivot).  Zero rows are dropped,
    so equal lattices yield identical outputs.
    """
    rows = [list(r) for r in mat if any(r)]
    basis = []
    for col in range(n):
        pool = [r for r in rows if r[col] != 0]
        rest = [r for r in rows if r[col] == 0]
        while len(pool) > 1:
            pool.sort(key=lambda r: abs(r[col]))
            piv = pool[0]
            keep = [piv]
            for r in pool[1:]:
                q = r[col] // piv[col]
                if q:
                    for k in range(col, n):
                        r[k] -= q * piv[k]
                if r[col] != 0:
                    keep.append(r)
                elif any(r):
                    rest.append(r)
            pool = keep
        if pool:
            piv = pool[0]
            if piv[col] < 0:
                for k in range(col, n):
                    piv[k] = -piv[k]
            basis.append(piv)
        rows = rest
    for i in range(len(basis) - 1, -1, -1):
        pcol = next(k for k in range(n) if basis[i][k] != 0)
        p = basis[i][pcol]
        for j in range(i):
            q = basis[j][pcol] // p
            if q:
                for k in range(n):
                    basis[j][k] -= q * basis[i][k]
    return basis


def left_kernel_mod_p(mat, p):
    """Basis of {v : v @ mat == 0 (mod p)} as rows over F_p."""
    m = len(mat)
    if m == 0:
        return []
    n = len(mat[0])
    # row-reduce the augmented [mat | I] over F_p; kernel rows are those whose
    # mat-part vanishes
    aug = [[mat[i][j] % p for j in range(n)] + [1 if k == i else 0 for k in range(m)] for i in range(m)]
    pivot_row = 0
    for col in range(n):
        sel = None
        for r in range(pivot_row, m):
            if aug[r][col] % p:
                sel = r
                break
        if sel is None:
            continue
        aug[pivot_row], aug[sel] = aug[sel], aug[pivot_row]
        inv = pow(aug[pivot_row][col], -1, p)
        aug[pivot_row] = [(x * inv) % p for x in aug[pivot_row]]
        for r in range(m):
            if r != pivot_row and aug[r][col]:
                c = aug[r][col]
                aug[r] = [(a - c * b) % p for a, b in zip(aug[r], aug[pivot_row])]
        pivot_row += 1
        if pivot_row == m:
            break
    return [row[n:] for row in aug[pivot_row:]]


def rank_mod_p(mat, p):
    m = len(mat)
    if m == 0:
        return 0
    n = len(mat[0])
    work = [[x % p for x in row] for row in mat]
    rank = 0
    for col in range(n):
        sel = None
        for r in range(rank, m):
            if work[r][col]:
                sel = r
                break
        if sel is None:
            continue
        work[rank], work[sel] = work[sel], work[rank]
        inv = pow(work[rank][col], -1, p)
        work[rank] = [(x * inv) % p for x in work[rank]]
        for r in range(m):
            if r != rank and work[r][col]:
                c = work[r][col]
                work[r] = [(a - c * b) % p for a, b in zip(work[r], work[rank])]
        rank += 1
        if rank == m:
            break
    return rank


def mat_mul_mod(a, b, m):
    rows, mid, cols = len(a), len(b), len(b[0])
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for k in range(mid):
            c = ai[k] % m
            if c:
                bk = b[k]
                for j in range(cols):
                    oi[j] = (oi[j] + c * bk[j]) % m
    return out


def det_bareiss(mat):
    """Exact determinant of a square integer matrix (fraction-free Bareiss)."""
    n = len(mat)
    if n == 0:
        return 1
    a = [list(r) for r in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            sel = None
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    sel = r
                    break
            if sel is None:
                return 0
            a[k], a[sel] = a[sel], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[-1][-1]


def invert_fraction(mat):
    """Exact inverse of a square integer (or Fraction) matrix, as Fractions."""
    n = len(mat)
    a = [[Fraction(mat[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        sel = next((r for r in range(col, n) if a[r][col] != 0), None)
        if sel is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[sel] = a[sel], a[col]
        pivot = a[col][col]
        a[col] = [x / pivot for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                c = a[r][col]
                a[r] = [x - c * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def vec_mat_fraction(vec, mat):
    n = len(mat)
    cols = len(mat[0])
    return [sum(vec[i] * mat[i][j] for i in range(n)) for j in range(cols)]
