"""Dense linear algebra over the prime field GF(p).

Matrices are lists of rows of ints in range(p).  Pivoting is deterministic
(first nonzero entry scanning down the column), so results are reproducible.
"""

__all__ = ["rref", "nullspace", "solve_affine", "mat_vec"]


def rref(M, p):
    """Reduced row echelon form; returns ``(R, pivot_columns)``."""
    R = [list(row) for row in M]
    ncols = len(R[0]) if R else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(R)) if R[i][c] % p), None)
        if pr is None:
            continue
        R[r], R[pr] = R[pr], R[r]
        inv = pow(R[r][c], p - 2, p)
        R[r] = [x * inv % p for x in R[r]]
        for i in range(len(R)):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [(x - f * y) % p for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == len(R):
            break
    return R[:r], pivots


def nullspace(M, p, ncols=None):
    """Basis of {x : M x = 0}, one vector per free column, in column order."""
    ncols = ncols if ncols is not None else (len(M[0]) if M else 0)
    R, pivots = rref(M, p) if M else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(R, pivots):
            v[pc] = -row[f] % p
        basis.append(v)
    return basis


def solve_affine(A, b, p):
    """Solve ``A x = b`` over GF(p).

    Returns ``(x0, basis)`` with x0 the particular solution that is zero on
    free columns, or ``(None, basis)`` if the system is inconsistent.
    """
    n = len(A[0]) if A else 0
    aug = [list(row) + [bi % p] for row, bi in zip(A, b)]
    R, pivots = rref(aug, p) if aug else ([], [])
    basis = nullspace(A, p, n)
    if n in pivots:
        return None, basis
    x0 = [0] * n
    for row, pc in zip(R, pivots):
        x0[pc] = row[n]
    return x0, basis


def mat_vec(A, x, p):
    return [sum(a * y for a, y in zip(row, x)) % p for row in A]
