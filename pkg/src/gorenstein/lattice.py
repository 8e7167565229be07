"""Exact integer/rational linear algebra for the polyhedral layer.

Everything here works over arbitrary-precision integers and Fractions;
no floating point.  Sizes are desk scale (dimension <= ~10), so the
implementations favour clarity over asymptotics.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def vec_gcd(values) -> int:
    g = 0
    for v in values:
        g = gcd(g, abs(v))
    return g


def dot(a, b) -> int | Fraction:
    return sum(x * y for x, y in zip(a, b, strict=True))


def primitive(vec: tuple[int, ...]) -> tuple[int, ...]:
    g = vec_gcd(vec)
    if g <= 1:
        return vec
    return tuple(v // g for v in vec)


def rational_rank(rows: list[list[Fraction]]) -> int:
    """Rank over Q, by Gaussian elimination on a copy."""
    mat = [[Fraction(x) for x in row] for row in rows]
    rank_ = 0
    ncols = len(mat[0]) if mat else 0
    col = 0
    while rank_ < len(mat) and col < ncols:
        pivot = next((i for i in range(rank_, len(mat)) if mat[i][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        mat[rank_], mat[pivot] = mat[pivot], mat[rank_]
        pv = mat[rank_][col]
        for i in range(rank_ + 1, len(mat)):
            if mat[i][col] != 0:
                f = mat[i][col] / pv
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank_])]
        rank_ += 1
        col += 1
    return rank_


def rational_nullspace_int(rows: list[list[int]], n: int) -> list[tuple[int, ...]]:
    """Integer-cleared basis of {x in Q^n : rows . x = 0}."""
    mat = [[Fraction(x) for x in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, len(mat)) if mat[i][col] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        pv = mat[r][col]
        mat[r] = [a / pv for a in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * n
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -mat[i][fc]
        denom = 1
        for v in vec:
            denom = denom * v.denominator // gcd(denom, v.denominator)
        ivec = tuple(int(v * denom) for v in vec)
        basis.append(primitive(ivec))
    return basis


def kernel_basis_with_dual(
    rows: list[list[int]], n: int
) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """Basis B of the integer kernel {x in Z^n : rows . x = 0}, with duals.

    Returns (B, D) where D[j] . B[i] = delta_ij and each D[j] is an
    integer vector (a row of the inverse of the unimodular column
    transform), so integer functionals on the kernel lattice extend to
    integer functionals on Z^n.  The kernel of an integer matrix is
    saturated, which is what makes this work.
    """
    a = [list(row) for row in rows]
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]  # columns tracked
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]  # v = u^{-1}

    def col_sub(j: int, j0: int, q: int) -> None:
        # column_j -= q * column_j0 on A and U; row_j0 += q * row_j on V
        for row in a:
            row[j] -= q * row[j0]
        for row in u:
            row[j] -= q * row[j0]
        v[j0] = [x + q * y for x, y in zip(v[j0], v[j])]

    def col_swap(j: int, j0: int) -> None:
        for row in a:
            row[j], row[j0] = row[j0], row[j]
        for row in u:
            row[j], row[j0] = row[j0], row[j]
        v[j], v[j0] = v[j0], v[j]

    pivot_col = 0
    for i in range(len(a)):
        cols = [j for j in range(pivot_col, n) if a[i][j] != 0]
        while len(cols) > 1:
            j0 = min(cols, key=lambda j: abs(a[i][j]))
            for j in cols:
                if j != j0:
                    q = a[i][j] // a[i][j0]
                    if q:
                        col_sub(j, j0, q)
            cols = [j for j in cols if a[i][j] != 0]
        if cols:
            if cols[0] != pivot_col:
                col_swap(cols[0], pivot_col)
            pivot_col += 1
    basis = [tuple(u[r][j] for r in range(n)) for j in range(pivot_col, n)]
    duals = [tuple(v[j]) for j in range(pivot_col, n)]
    return basis, duals


def fraction_matrix_inverse(mat: list[list[Fraction]]) -> list[list[Fraction]]:
    """Exact inverse of a square rational matrix (raises on singular)."""
    n = len(mat)
    aug = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(mat)
    ]
    for col in range(n):
        pivot = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [a / pv for a in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]


def scale_to_primitive_int(vec) -> tuple[int, ...]:
    """Scale a rational vector by a positive rational to a primitive integer vector."""
    denom = 1
    for x in vec:
        f = Fraction(x)
        denom = denom * f.denominator // gcd(denom, f.denominator)
    ivec = [int(Fraction(x) * denom) for x in vec]
    g = vec_gcd(ivec)
    if g > 1:
        ivec = [x // g for x in ivec]
    return tuple(ivec)
