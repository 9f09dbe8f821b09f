"""Small exact linear algebra helpers over Z and Q.

Vectors are tuples of ints (or Fractions where stated); matrices are
sequences of row tuples.  Everything is exact, nothing here touches
floating point.
"""

from fractions import Fraction
from math import gcd


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def gcd_vec(v):
    g = 0
    for x in v:
        g = gcd(g, x)
        if g == 1:
            return 1
    return g


def primitive(v):
    """Divide an integer vector by the gcd of its entries (zero stays zero)."""
    g = gcd_vec(v)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def sign_normalized(v):
    """Flip sign so the first non-zero entry is positive."""
    for x in v:
        if x:
            return tuple(v) if x > 0 else tuple(-y for y in v)
    return tuple(v)


def rank_int(vectors):
    """Rank over Q of a family of integer vectors (fraction-free elimination)."""
    rows = [list(v) for v in vectors if any(v)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    col = 0
    while col < ncols and rank < len(rows):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        lead = rows[rank][col]
        for i in range(rank + 1, len(rows)):
            x = rows[i][col]
            if x:
                rows[i] = [lead * a - x * b for a, b in zip(rows[i], rows[rank])]
                g = gcd_vec(rows[i])
                if g > 1:
                    rows[i] = [a // g for a in rows[i]]
        rank += 1
        col += 1
    return rank


def solve_square(rows, rhs):
    """Solve a square linear system exactly.  Returns a Fraction tuple or
    None when the matrix is singular."""
    n = len(rows)
    a = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col]), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        lead = a[col][col]
        a[col] = [x / lead for x in a[col]]
        for i in range(n):
            if i != col and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return tuple(a[i][n] for i in range(n))


def invert(rows):
    """Exact inverse of a square integer matrix as Fraction rows, or None."""
    n = len(rows)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(rows)]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col]), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        lead = a[col][col]
        a[col] = [x / lead for x in a[col]]
        for i in range(n):
            if i != col and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return [row[n:] for row in a]


def solve_columns(columns, target):
    """Solve sum_j t_j * columns[j] = target for a full-column-rank family.

    Returns the Fraction coefficient tuple, or None when the system is
    inconsistent.  Used for membership in simplicial cones.
    """
    d = len(target)
    k = len(columns)
    a = [[Fraction(columns[j][i]) for j in range(k)] + [Fraction(target[i])]
         for i in range(d)]
    pivots = []
    row = 0
    for col in range(k):
        piv = next((i for i in range(row, d) if a[i][col]), None)
        if piv is None:
            return None  # columns were not independent
        a[row], a[piv] = a[piv], a[row]
        lead = a[row][col]
        a[row] = [x / lead for x in a[row]]
        for i in range(d):
            if i != row and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[row])]
        pivots.append(row)
        row += 1
    for i in range(row, d):
        if a[i][k]:
            return None  # inconsistent
    return tuple(a[r][k] for r in pivots)


def diagonalize_with_uinv(rows):
    """Diagonalize an integer square matrix S by unimodular row and column
    operations: U S V = D.

    Returns (diag, uinv) where diag is the list of diagonal entries of D and
    uinv is U^{-1} as a list of rows.  Only U^{-1} is tracked; the column
    operations V are not needed by callers (coset representatives of
    Z^d / S Z^d are U^{-1} c with c ranging over the boxes [0, |d_i|)).
    """
    n = len(rows)
    m = [list(r) for r in rows]
    uinv = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        for r in uinv:
            r[i], r[j] = r[j], r[i]

    def add_row(i, j, q):
        # row_i -= q * row_j  =>  col_j of U^{-1} += q * col_i
        m[i] = [a - q * b for a, b in zip(m[i], m[j])]
        for r in uinv:
            r[j] += q * r[i]

    def swap_cols(i, j):
        for r in m:
            r[i], r[j] = r[j], r[i]

    def add_col(i, j, q):
        # col_i -= q * col_j (no tracking needed)
        for r in m:
            r[i] -= q * r[j]

    for k in range(n):
        while True:
            best = None
            for i in range(k, n):
                for j in range(k, n):
                    if m[i][j] and (best is None or abs(m[i][j]) < best[0]):
                        best = (abs(m[i][j]), i, j)
            if best is None:
                break
            _, bi, bj = best
            if bi != k:
                swap_rows(k, bi)
            if bj != k:
                swap_cols(k, bj)
            done = True
            for i in range(k + 1, n):
                if m[i][k]:
                    add_row(i, k, m[i][k] // m[k][k])
                    if m[i][k]:
                        done = False
            for j in range(k + 1, n):
                if m[k][j]:
                    add_col(j, k, m[k][j] // m[k][k])
                    if m[k][j]:
                        done = False
            if done and all(m[i][k] == 0 for i in range(k + 1, n)) \
                    and all(m[k][j] == 0 for j in range(k + 1, n)):
                break
    return [m[i][i] for i in range(n)], uinv


def matvec(rows, v):
    return tuple(dot(r, v) for r in rows)
