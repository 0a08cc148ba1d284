"""Dense linear algebra over exact rationals or floats.

Everything operates on lists of lists.  Exact mode (``Fraction`` entries)
pivots on any nonzero entry; float mode uses partial pivoting.  Sizes are
desk-scale (tensor identities need at most a few hundred rows), so Gaussian
elimination is all that is required.
"""

from __future__ import annotations

from fractions import Fraction


def _is_exact(x) -> bool:
    return isinstance(x, (int, Fraction))


def mat_identity(n: int):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            c = ai[t]
            if c == 0:
                continue
            bt = b[t]
            for j in range(m):
                if bt[j] != 0:
                    oi[j] += c * bt[j]
    return out


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_equal(a, b) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def mat_max_abs_diff(a, b):
    return max(
        (abs(x - y) for ra, rb in zip(a, b) for x, y in zip(ra, rb)),
        default=0,
    )


def mat_kron(a, b):
    na, nb = len(a), len(b)
    ma, mb = len(a[0]), len(b[0])
    out = [[0] * (ma * mb) for _ in range(na * nb)]
    for i in range(na):
        for j in range(ma):
            c = a[i][j]
            if c == 0:
                continue
            for k in range(nb):
                for t in range(mb):
                    if b[k][t] != 0:
                        out[i * nb + k][j * mb + t] = c * b[k][t]
    return out


def mat_transpose(a):
    return [list(col) for col in zip(*a)]


def mat_inverse(a):
    """Inverse by Gauss-Jordan; exact when entries are rational."""
    n = len(a)
    exact = all(_is_exact(x) for row in a for x in row)
    work = [
        [Fraction(x) if exact else complex(x) for x in row] + [
            Fraction(int(i == j)) if exact else complex(i == j) for j in range(n)
        ]
        for i, row in enumerate(a)
    ]
    for col in range(n):
        pivot = None
        if exact:
            for r in range(col, n):
                if work[r][col] != 0:
                    pivot = r
                    break
        else:
            pivot = max(range(col, n), key=lambda r: abs(work[r][col]))
            if abs(work[pivot][col]) == 0:
                pivot = None
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        work[col], work[pivot] = work[pivot], work[col]
        inv_p = work[col][col]
        work[col] = [x / inv_p for x in work[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
    return [row[n:] for row in work]


def solve_linear(a, b):
    """Solve A x = b for a single right-hand side vector."""
    n = len(a)
    exact = all(_is_exact(x) for row in a for x in row) and all(
        _is_exact(x) for x in b
    )
    work = [list(row) + [rhs] for row, rhs in zip(a, b)]
    if exact:
        work = [[Fraction(x) for x in row] for row in work]
    for col in range(n):
        if exact:
            pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
        else:
            pivot = max(range(col, n), key=lambda r: abs(work[r][col]))
            if abs(work[pivot][col]) == 0:
                pivot = None
        if pivot is None:
            raise ZeroDivisionError("singular linear system")
        work[col], work[pivot] = work[pivot], work[col]
        piv = work[col][col]
        work[col] = [x / piv for x in work[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
    return [work[i][n] for i in range(n)]


def flip_matrix(n: int):
    """P on C^n (x) C^n with P(v (x) w) = w (x) v, as an n^2 x n^2 matrix."""
    out = [[0] * (n * n) for _ in range(n * n)]
    for i in range(n):
        for j in range(n):
            out[i * n + j][j * n + i] = 1
    return out


def partial_transpose_first(a, n: int):
    """Transpose in the first tensor factor of an n^2 x n^2 matrix:
    B[(i,k),(j,l)] = A[(j,k),(i,l)]."""
    out = [[0] * (n * n) for _ in range(n * n)]
    for i in range(n):
        for k in range(n):
            for j in range(n):
                for l in range(n):
                    out[i * n + k][j * n + l] = a[j * n + k][i * n + l]
    return out
