"""Exact integer/rational linear algebra: HNF, SNF, kernels, lattice quotients.

Matrices are lists of rows of Python ints (or Fractions where stated).  Sizes
here are tiny (at most a few dozen rows), so clarity beats asymptotics.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (x, y, g) with x*a + y*b == g == gcd(a, b) >= 0."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


def identity_matrix(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[list[int]]:
    n, k, m = len(a), len(b), len(b[0])
    assert all(len(r) == k for r in a)
    return [[sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m)] for i in range(n)]


def mat_vec(a: Sequence[Sequence[int]], v: Sequence[int]) -> list[int]:
    return [sum(r[j] * v[j] for j in range(len(v))) for r in a]


def transpose(a: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*a)] if a else []


def hnf_rows(mat: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row-style Hermite normal form; returns the nonzero rows.

    The row span (the lattice generated by the rows) is preserved, pivots are
    positive and entries above a pivot are reduced into [0, pivot).
    """
    rows = [list(r) for r in mat if any(r)]
    if not rows:
        return []
    ncols = len(rows[0])
    out: list[list[int]] = []
    col = 0
    while col < ncols and rows:
        pivot_rows = [r for r in rows if r[col]]
        rest = [r for r in rows if not r[col]]
        if not pivot_rows:
            rows = rest
            col += 1
            continue
        while len(pivot_rows) > 1:
            pivot_rows.sort(key=lambda r: abs(r[col]))
            base = pivot_rows[0]
            new = [base]
            for r in pivot_rows[1:]:
                q = r[col] // base[col]
                r2 = [x - q * y for x, y in zip(r, base)]
                if r2[col]:
                    new.append(r2)
                elif any(r2):
                    rest.append(r2)
            pivot_rows = new
        piv = pivot_rows[0]
        if piv[col] < 0:
            piv = [-x for x in piv]
        # reduce previous pivot rows above this column
        for prev in out:
            q = prev[col] // piv[col]
            if q:
                prev[:] = [x - q * y for x, y in zip(prev, piv)]
        out.append(list(piv))
        rows = [r for r in rest if any(r)]
        col += 1
    return out


def kernel_basis(mat: Sequence[Sequence[int]]) -> list[list[int]]:
    """Basis (list of vectors) of the integer right kernel {x : mat @ x = 0}."""
    if not mat:
        raise ValueError("empty matrix")
    n = len(mat[0])
    # Row-reduce [A^T | I]; rows whose A^T-part becomes zero give kernel vectors.
    aug = [list(col) + [1 if i == j else 0 for j in range(n)] for i, col in enumerate(transpose(mat))]
    m = len(mat)
    # integer row echelon on the first m columns, full tracking
    rows = [list(r) for r in aug]
    pivot_col = 0
    row_idx = 0
    while pivot_col < m and row_idx < len(rows):
        # find pivot
        cand = [i for i in range(row_idx, len(rows)) if rows[i][pivot_col]]
        if not cand:
            pivot_col += 1
            continue
        while len(cand) > 1:
            cand.sort(key=lambda i: abs(rows[i][pivot_col]))
            base = cand[0]
            new_cand = [base]
            for i in cand[1:]:
                q = rows[i][pivot_col] // rows[base][pivot_col]
                rows[i] = [x - q * y for x, y in zip(rows[i], rows[base])]
                if rows[i][pivot_col]:
                    new_cand.append(i)
            cand = new_cand
        rows[row_idx], rows[cand[0]] = rows[cand[0]], rows[row_idx]
        for i in range(len(rows)):
            if i != row_idx and rows[i][pivot_col]:
                q = rows[i][pivot_col] // rows[row_idx][pivot_col]
                rows[i] = [x - q * y for x, y in zip(rows[i], rows[row_idx])]
        pivot_col += 1
        row_idx += 1
    basis = [r[m:] for r in rows if not any(r[:m])]
    return hnf_rows(basis)


def smith_invariants(mat: Sequence[Sequence[int]], keep_ones: bool = False) -> list[int]:
    """Invariant factors d1 | d2 | ... of an integer matrix (zeros dropped)."""
    a = [list(r) for r in mat]
    if not a or not a[0]:
        return []
    m, n = len(a), len(a[0])
    diag: list[int] = []
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i0, j0 = best
        a[t], a[i0] = a[i0], a[t]
        for r in a:
            r[t], r[j0] = r[j0], r[t]
        # reduce row/column remainders; |pivot| strictly shrinks until it divides
        if any(a[i][t] % a[t][t] for i in range(t + 1, m)) or any(
            a[t][j] % a[t][t] for j in range(t + 1, n)
        ):
            for i in range(t + 1, m):
                q = a[i][t] // a[t][t]
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
            for j in range(t + 1, n):
                q = a[t][j] // a[t][t]
                if q:
                    for r in a:
                        r[j] -= q * r[t]
            continue
        for i in range(t + 1, m):
            q = a[i][t] // a[t][t]
            if q:
                a[i] = [x - q * y for x, y in zip(a[i], a[t])]
        for j in range(t + 1, n):
            q = a[t][j] // a[t][t]
            if q:
                for r in a:
                    r[j] -= q * r[t]
        viol = next(
            (i for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % a[t][t]),
            None,
        )
        if viol is not None:
            a[t] = [x + y for x, y in zip(a[t], a[viol])]
            continue
        diag.append(abs(a[t][t]))
        t += 1
    if keep_ones:
        return diag
    return [d for d in diag if d != 1]


def rank_fractions(mat: Sequence[Sequence]) -> int:
    """Rank over Q by fraction Gaussian elimination."""
    rows = [[Fraction(x) for x in r] for r in mat]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    col = 0
    while col < ncols and rank < len(rows):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


def det_fractions(mat: Sequence[Sequence]) -> Fraction:
    rows = [[Fraction(x) for x in r] for r in mat]
    n = len(rows)
    det = Fraction(1)
    for col in range(n):
        piv = next((i for i in range(col, n) if rows[i][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        det *= rows[col][col]
        for i in range(col + 1, n):
            if rows[i][col]:
                f = rows[i][col] / rows[col][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[col])]
    return det


def solve_matrix(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list[Fraction]]:
    """Solve A @ X = B exactly over Q for square nonsingular A."""
    n = len(a)
    rows = [[Fraction(x) for x in ra] + [Fraction(x) for x in rb] for ra, rb in zip(a, b)]
    for col in range(n):
        piv = next((i for i in range(col, n) if rows[i][col]), None)
        if piv is None:
            raise ValueError("singular matrix")
        rows[col], rows[piv] = rows[piv], rows[col]
        rows[col] = [x / rows[col][col] for x in rows[col]]
        for i in range(n):
            if i != col and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[col])]
    return [r[n:] for r in rows]


def lattice_basis(generators: Sequence[Sequence[int]]) -> list[list[int]]:
    """Canonical basis (rows) of the lattice spanned by the generator rows."""
    return hnf_rows(generators)


def quotient_invariants(big: Sequence[Sequence[int]], small: Sequence[Sequence[int]]) -> list[int]:
    """Invariant factors of L_big / L_small for lattices given by generator rows.

    Requires L_small <= L_big with equal rank (finite quotient); factors 1 are
    dropped, so [] means the quotient is trivial.
    """
    b1 = lattice_basis(big)
    b2 = lattice_basis(small)
    if len(b1) != len(b2):
        raise ValueError("quotient is not finite (rank mismatch)")
    if not b1:
        return []
    # rows: express each basis row of small in terms of rows of big
    coeffs = solve_matrix(transpose(b1), transpose(b2))
    c_int = []
    for row in coeffs:
        for x in row:
            if x.denominator != 1:
                raise ValueError("small lattice is not contained in big lattice")
        c_int.append([int(x) for x in row])
    return smith_invariants(c_int)
