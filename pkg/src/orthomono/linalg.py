"""Exact linear algebra over Q and Z: lists of lists of Fraction/int.

Everything is deterministic (pivot = first usable row/column) and exact;
no floating point.  Matrices are row-major.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

Vec = Sequence
Mat = Sequence[Sequence]


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(m: Mat) -> list[list]:
    return [list(row) for row in zip(*m)]


def mat_mul(a: Mat, b: Mat) -> list[list]:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a: Mat, x: Vec) -> list:
    return [sum(c * v for c, v in zip(row, x)) for row in a]


def vec_dot(x: Vec, g: Mat, y: Vec):
    """Bilinear form value x^T g y."""
    return sum(xi * s for xi, s in zip(x, mat_vec(g, y)))


def mat_eq(a: Mat, b: Mat) -> bool:
    return len(a) == len(b) and all(
        len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb))
        for ra, rb in zip(a, b)
    )


def rref(m: Mat) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot column indices."""
    rows = [[Fraction(x) for x in row] for row in m]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rank(m: Mat) -> int:
    return len(rref(m)[1])


def det(m: Mat) -> Fraction:
    rows = [[Fraction(x) for x in row] for row in m]
    n = len(rows)
    sign = 1
    result = Fraction(1)
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != c:
            rows[c], rows[pivot_row] = rows[pivot_row], rows[c]
            sign = -sign
        pv = rows[c][c]
        result *= pv
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = rows[i][c] / pv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return sign * result


def inverse(m: Mat) -> list[list[Fraction]]:
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    reduced, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in reduced[:n]]


def nullspace(m: Mat) -> list[list[Fraction]]:
    """Basis of the right kernel over Q, one vector per free column,
    free columns in ascending order."""
    reduced, pivots = rref(m)
    ncols = len(m[0]) if m else 0
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -reduced[r][fc]
        basis.append(v)
    return basis


def coordinates(rows: Mat, target: Vec) -> list[Fraction] | None:
    """Coefficients expressing target as a combination of the given rows,
    or None if target is outside their span."""
    if not rows:
        return None if any(x != 0 for x in target) else []
    k = len(rows)
    n = len(rows[0])
    aug = [[Fraction(rows[j][i]) for j in range(k)] + [Fraction(target[i])]
           for i in range(n)]
    reduced, pivots = rref(aug)
    if k in pivots:
        return None
    coeffs = [Fraction(0)] * k
    for r, pc in enumerate(pivots):
        coeffs[pc] = reduced[r][k]
    return coeffs


def primitive_integer(vec: Vec) -> tuple[int, ...]:
    """Scale a rational vector to a primitive integer vector whose first
    nonzero entry is positive."""
    fracs = [Fraction(x) for x in vec]
    if all(f == 0 for f in fracs):
        return tuple(0 for _ in fracs)
    lcm = 1
    for f in fracs:
        lcm = lcm * f.denominator // math.gcd(lcm, f.denominator)
    ints = [int(f * lcm) for f in fracs]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    ints = [c // g for c in ints]
    lead = next(c for c in ints if c != 0)
    if lead < 0:
        ints = [-c for c in ints]
    return tuple(ints)


def int_row_kernel(row: Sequence[int]) -> list[list[int]]:
    """Basis of the lattice {x in Z^n : row . x = 0} for an integer row.

    Column-eliminates the row by unimodular operations; the columns that map
    to zero form the kernel basis.  Deterministic.
    """
    n = len(row)
    r = list(row)
    u = identity(n)  # columns of u are the generators
    for i in range(1, n):
        if r[i] == 0:
            continue
        if r[0] == 0:
            # swap columns 0 and i
            r[0], r[i] = r[i], r[0]
            for k in range(n):
                u[k][0], u[k][i] = u[k][i], u[k][0]
            continue
        g = math.gcd(r[0], r[i])
        s, t = _extgcd(r[0], r[i])
        a, b = r[0] // g, r[i] // g
        for k in range(n):
            c0, ci = u[k][0], u[k][i]
            u[k][0] = s * c0 + t * ci
            u[k][i] = -b * c0 + a * ci
        r[0], r[i] = g, 0
    return [[u[k][j] for k in range(n)] for j in range(1, n)]


def _extgcd(a: int, b: int) -> tuple[int, int]:
    """(s, t) with s*a + t*b = gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_s, old_t = -old_s, -old_t
    return old_s, old_t


def unimodular_with_first_row(c: Sequence[int]) -> list[list[int]]:
    """Integer matrix with determinant +-1 whose first row is the primitive
    vector c."""
    n = len(c)
    r = list(c)
    u = identity(n)
    for i in range(1, n):
        if r[i] == 0:
            continue
        if r[0] == 0:
            r[0], r[i] = r[i], r[0]
            for k in range(n):
                u[k][0], u[k][i] = u[k][i], u[k][0]
            continue
        g = math.gcd(r[0], r[i])
        s, t = _extgcd(r[0], r[i])
        a, b = r[0] // g, r[i] // g
        for k in range(n):
            c0, ci = u[k][0], u[k][i]
            u[k][0] = s * c0 + t * ci
            u[k][i] = -b * c0 + a * ci
        r[0], r[i] = g, 0
    if abs(r[0]) != 1:
        raise ValueError("vector is not primitive")
    inv = inverse(u)
    out = [[int(x) for x in row] for row in inv]
    if out[0] != list(c):
        # c . u = (-1, 0, ..., 0); flip the first column of u
        for k in range(n):
            u[k][0] = -u[k][0]
        inv = inverse(u)
        out = [[int(x) for x in row] for row in inv]
    assert out[0] == list(c)
    return out
