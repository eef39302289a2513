"""Exact integer and rational linear algebra.

Everything here works over Python ints and fractions.Fraction; no floating
point anywhere.  Matrices are lists (or tuples) of rows.
"""

from fractions import Fraction
from math import gcd, isqrt


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    return [[sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m)] for i in range(n)]


def mat_vec(a, v):
    return [sum(row[j] * v[j] for j in range(len(v))) for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)] if a else []


def det_int(m):
    """Determinant of a square integer matrix by fraction-free Bareiss elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def smith_normal_form(m):
    """Smith normal form of an integer matrix.

    Returns (d, u, v) with u * m * v = d, u and v unimodular, and d diagonal
    with d[0][0] | d[1][1] | ... (diagonal entries nonnegative).
    """
    a = [list(row) for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = identity(rows)
    v = identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, c):
        for row in a:
            row[dst] += c * row[src]
        for row in v:
            row[dst] += c * row[src]

    def clear_at(t):
        """Clear row and column t beyond the pivot a[t][t] by Euclid steps."""
        while True:
            for i in range(t + 1, rows):
                while a[i][t] != 0:
                    add_row(t, i, -(a[i][t] // a[t][t]))
                    if a[i][t] != 0:
                        swap_rows(t, i)
            for j in range(t + 1, cols):
                while a[t][j] != 0:
                    add_col(t, j, -(a[t][j] // a[t][t]))
                    if a[t][j] != 0:
                        swap_cols(t, j)
            if all(a[i][t] == 0 for i in range(t + 1, rows)) and \
               all(a[t][j] == 0 for j in range(t + 1, cols)):
                return

    t = 0
    while t < min(rows, cols):
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < best):
                    best = abs(a[i][j])
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        clear_at(t)
        t += 1

    n = min(rows, cols)
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            if a[i][i] != 0 and a[i + 1][i + 1] % a[i][i] != 0:
                add_row(i + 1, i, 1)
                clear_at(i)
                changed = True
    for i in range(n):
        if a[i][i] < 0:
            a[i] = [-x for x in a[i]]
            u[i] = [-x for x in u[i]]
    return a, u, v


def hermite_normal_form(m):
    """Row-style Hermite normal form of an integer matrix (zero rows dropped).

    Pivots are positive, entries above a pivot reduced into [0, pivot).
    """
    a = [list(row) for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if a[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, rows):
            while a[i][c] != 0:
                q = a[r][c] // a[i][c]
                a[r] = [x - q * y for x, y in zip(a[r], a[i])]
                a[r], a[i] = a[i], a[r]
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
        for i in range(r):
            q = a[i][c] // a[r][c]
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == rows:
            break
    return [row for row in a[:r] if any(row)]


def kernel_basis(m):
    """Basis of the integer kernel {x : m x = 0} of an integer matrix.

    The returned rows span a saturated sublattice (quotient is torsion free).
    """
    d, _, v = smith_normal_form(m)
    cols = len(m[0])
    rank = sum(1 for i in range(min(len(m), cols)) if d[i][i] != 0)
    vt = transpose(v)
    return vt[rank:]


def solve_int(m, b):
    """One integer solution x of m x = b, or None when unsolvable."""
    d, u, v = smith_normal_form(m)
    ub = mat_vec(u, b)
    cols = len(m[0])
    y = [0] * cols
    for i in range(len(m)):
        di = d[i][i] if i < cols else 0
        if di == 0:
            if ub[i] != 0:
                return None
        else:
            if ub[i] % di != 0:
                return None
            y[i] = ub[i] // di
    return mat_vec(v, y)


def solve_rational(m, b):
    """Solution of m x = b over the rationals, or None when inconsistent."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(m, b)]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        a[r] = [x / a[r][c] for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    for i in range(r, rows):
        if a[i][cols] != 0:
            return None
    x = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x[c] = a[i][cols]
    return x


def invert_rational(m):
    """Inverse of a nonsingular square matrix, entries Fraction."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[c], a[piv] = a[piv], a[c]
        a[c] = [x / a[c][c] for x in a[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [row[n:] for row in a]


def signature(gram):
    """(positive, negative) inertia of a nonsingular rational symmetric matrix."""
    n = len(gram)
    a = [[Fraction(x) for x in row] for row in gram]
    pos = neg = 0
    for k in range(n):
        if a[k][k] == 0:
            j = next((j for j in range(k + 1, n) if a[j][j] != 0), None)
            if j is not None:
                a[k], a[j] = a[j], a[k]
                for row in a:
                    row[k], row[j] = row[j], row[k]
            else:
                j = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
                if j is None:
                    raise ValueError("singular gram matrix")
                # both diagonal entries vanish but a[k][j] does not; adding
                # row and column j to k makes the pivot 2*a[k][j] != 0
                for t in range(n):
                    a[k][t] += a[j][t]
                for t in range(n):
                    a[t][k] += a[t][j]
        p = a[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        rows_below = range(k + 1, n)
        factors = [a[i][k] / p for i in rows_below]
        for i, f in zip(rows_below, factors):
            if f:
                for j in range(k + 1, n):
                    a[i][j] -= f * a[k][j]
        for i in rows_below:
            a[i][k] = Fraction(0)
            a[k][i] = Fraction(0)
    return pos, neg


def ldl_decomposition(gram):
    """LDL^T data of a positive-definite rational symmetric matrix.

    Returns (d, l) with x^T gram x = sum_i d[i] * (x_i + sum_{j>i} l[i][j] x_j)^2.
    """
    n = len(gram)
    a = [[Fraction(x) for x in row] for row in gram]
    d = [Fraction(0)] * n
    l = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        l[i][i] = Fraction(1)
    for k in range(n):
        if a[k][k] <= 0:
            raise ValueError("matrix is not positive definite")
        d[k] = a[k][k]
        for j in range(k + 1, n):
            l[k][j] = a[k][j] / a[k][k]
        for i in range(k + 1, n):
            for j in range(i, n):
                a[i][j] -= a[k][i] * a[k][j] / a[k][k]
                a[j][i] = a[i][j]
    return d, l


def lll_reduce_gram(gram, delta=Fraction(3, 4)):
    """Exact LLL on a positive-definite Gram matrix.

    Returns (gram', t) with gram' = t * gram * t^T and t unimodular.  Operates
    on the Gram matrix alone; used to precondition short-vector enumeration.
    """
    n = len(gram)
    if n <= 1:
        return [list(r) for r in gram], identity(n)
    g = [[Fraction(x) for x in row] for row in gram]
    t = identity(n)

    def gso():
        mu = [[Fraction(0)] * n for _ in range(n)]
        bstar = [Fraction(0)] * n
        for i in range(n):
            bi = Fraction(g[i][i])
            for j in range(i):
                m = Fraction(g[i][j])
                for k2 in range(j):
                    m -= mu[j][k2] * mu[i][k2] * bstar[k2]
                mu[i][j] = m / bstar[j]
                bi -= mu[i][j] ** 2 * bstar[j]
            bstar[i] = bi
        return mu, bstar

    def row_op(i, j, r):
        """basis_i -= r * basis_j, updating g and t."""
        new_ii = g[i][i] - 2 * r * g[i][j] + r * r * g[j][j]
        g[i] = [x - r * y for x, y in zip(g[i], g[j])]
        for k2 in range(n):
            if k2 != i:
                g[k2][i] = g[i][k2]
        g[i][i] = new_ii
        t[i] = [x - r * y for x, y in zip(t[i], t[j])]

    def swap(i, j):
        g[i], g[j] = g[j], g[i]
        for row in g:
            row[i], row[j] = row[j], row[i]
        t[i], t[j] = t[j], t[i]

    mu, bstar = gso()
    k = 1
    while k < n:
        for j in range(k - 1, -1, -1):
            r = round(mu[k][j])
            if r:
                row_op(k, j, r)
                for jj in range(j):
                    mu[k][jj] -= r * mu[j][jj]
                mu[k][j] -= r
        if bstar[k] >= (delta - mu[k][k - 1] ** 2) * bstar[k - 1]:
            k += 1
        else:
            swap(k - 1, k)
            mu, bstar = gso()
            k = max(k - 1, 1)
    return g, t


def rational_gcd(values):
    """gcd of a collection of rationals: the largest g with every value in g*Z."""
    g = Fraction(0)
    for v in values:
        f = abs(Fraction(v))
        if f == 0:
            continue
        if g == 0:
            g = f
        else:
            g = Fraction(gcd(g.numerator * f.denominator, f.numerator * g.denominator),
                         g.denominator * f.denominator)
    return g


def floor_sqrt_quotient(a, nsq, m):
    """floor((a + sqrt(nsq)) / m) for integers a, nsq >= 0, m > 0."""
    return (a + isqrt(nsq)) // m


def ceil_sqrt_quotient(a, nsq, m):
    """ceil((a - sqrt(nsq)) / m) for integers a, nsq >= 0, m > 0."""
    return -((-a + isqrt(nsq)) // m)
