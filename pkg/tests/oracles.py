"""Independent reference computations used to freeze and cross-check expected values.

Deliberately naive: nested lists, Laplace expansion, plain loops.
"""

from itertools import product


def naive_mul(a, b, m=None):
    n = len(a)
    out = [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    if m is not None:
        out = [[e % m for e in row] for row in out]
    return out


def naive_pow(a, k, m=None):
    n = len(a)
    out = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(k):
        out = naive_mul(out, a, m)
    return out


def _minor(a, i, j):
    return [[e for c, e in enumerate(r) if c != j] for rr, r in enumerate(a) if rr != i]


def cofactor_det(a):
    if len(a) == 1:
        return a[0][0]
    return sum((-1) ** j * a[0][j] * cofactor_det(_minor(a, 0, j)) for j in range(len(a)))


# polynomials as ascending coefficient lists
def _padd(p, q):
    n = max(len(p), len(q))
    return [(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)]


def _pmul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        for j, y in enumerate(q):
            out[i + j] += x * y
    return out


def _poly_det(a):
    if len(a) == 1:
        return a[0][0]
    total = [0]
    for j in range(len(a)):
        term = _pmul(a[0][j], _poly_det(_minor(a, 0, j)))
        if j % 2:
            term = [-c for c in term]
        total = _padd(total, term)
    return total


def cofactor_charpoly(a):
    """Ascending coefficients of det(xI - a) by Laplace expansion over Z[x]."""
    n = len(a)
    xa = [[[-a[i][j], 1] if i == j else [-a[i][j]] for j in range(n)] for i in range(n)]
    p = _poly_det(xa)
    return p + [0] * (n + 1 - len(p))


def count_form_preserving(dim, m):
    """Number of dim x dim matrices X mod m with X^T J X = J, J the standard block form."""
    h = dim // 2
    J = [[1 if j == i + h else -1 if i == j + h else 0 for j in range(dim)] for i in range(dim)]
    Jm = [[e % m for e in r] for r in J]
    count = 0
    for entries in product(range(m), repeat=dim * dim):
        X = [list(entries[i * dim:(i + 1) * dim]) for i in range(dim)]
        XT = [list(r) for r in zip(*X)]
        if naive_mul(naive_mul(XT, J, m), X, m) == Jm:
            count += 1
    return count
