"""Rank and kernel computations over Q (fraction-free) and over floats."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

FLOAT_RANK_RTOL = 1e-9


@dataclass
class Echelon:
    """Integer row-echelon form produced by Bareiss elimination."""

    rows: list[list[int]]
    pivots: list[int]
    ncols: int
    ops: int  # multiplications performed, for operation-count scaling checks

    @property
    def rank(self) -> int:
        return len(self.pivots)


def _integer_rows(matrix) -> list[list[int]]:
    rows = []
    for row in matrix:
        row = [Fraction(v) for v in row]
        scale = lcm(*(v.denominator for v in row)) if row else 1
        rows.append([int(v * scale) for v in row])
    return rows


def bareiss_echelon(matrix) -> Echelon:
    """Fraction-free Gaussian elimination to row-echelon form.

    Rows are first cleared of denominators; every intermediate entry is then
    a minor of the integer matrix, which keeps bit growth linear.
    """
    a = _integer_rows(matrix)
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    pivots: list[int] = []
    prev = 1
    r = 0
    ops = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
        piv_row = a[r]
        piv = piv_row[c]
        nz = [j for j in range(c + 1, ncols) if piv_row[j] != 0]
        for i in range(r + 1, nrows):
            row = a[i]
            f = row[c]
            if f == 0:
                # exact division still needed to keep entries as minors
                if prev != 1:
                    for j in range(c + 1, ncols):
                        if row[j]:
                            row[j] = row[j] * piv // prev
                            ops += 1
                else:
                    for j in range(c + 1, ncols):
                        if row[j]:
                            row[j] = row[j] * piv
                            ops += 1
                continue
            touched = set(nz)
            touched.update(j for j in range(c + 1, ncols) if row[j] != 0)
            for j in touched:
                row[j] = (row[j] * piv - f * piv_row[j]) // prev
                ops += 2
            row[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return Echelon(a[:r], pivots, ncols, ops)


def exact_rank(matrix) -> int:
    return bareiss_echelon(matrix).rank


def exact_kernel(matrix) -> list[list[Fraction]]:
    """Basis of the right kernel, one vector per non-pivot column.

    Each basis vector has a 1 in its own free column and 0 in the others.
    """
    ech = bareiss_echelon(matrix)
    free = [c for c in range(ech.ncols) if c not in set(ech.pivots)]
    basis = []
    for fcol in free:
        x = [Fraction(0)] * ech.ncols
        x[fcol] = Fraction(1)
        for r in range(ech.rank - 1, -1, -1):
            row = ech.rows[r]
            pc = ech.pivots[r]
            acc = Fraction(0)
            for j in range(pc + 1, ech.ncols):
                if row[j] and x[j]:
                    acc += row[j] * x[j]
            x[pc] = -acc / row[pc]
        basis.append(x)
    return basis


def float_rank(matrix, rtol: float = FLOAT_RANK_RTOL) -> int:
    s = np.linalg.svd(np.asarray(matrix, dtype=float), compute_uv=False)
    if s.size == 0 or s[0] == 0:
        return 0
    return int(np.sum(s > rtol * s[0]))


def float_kernel(matrix, dim: int | None = None, rtol: float = FLOAT_RANK_RTOL) -> np.ndarray:
    """Orthonormal kernel basis as columns, from the SVD."""
    a = np.asarray(matrix, dtype=float)
    _, s, vt = np.linalg.svd(a)
    if dim is None:
        rank = int(np.sum(s > rtol * s[0])) if s.size else 0
        dim = a.shape[1] - rank
    return vt[a.shape[1] - dim:].T.copy()


def det3(m):
    """Determinant of a 3x3 nested sequence; exact for Fractions."""
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def inv3(m):
    """Inverse of a 3x3 nested sequence via the adjugate."""
    d = det3(m)
    if d == 0:
        raise ZeroDivisionError("singular 3x3 matrix")
    cof = [[(m[(i + 1) % 3][(j + 1) % 3] * m[(i + 2) % 3][(j + 2) % 3]
             - m[(i + 1) % 3][(j + 2) % 3] * m[(i + 2) % 3][(j + 1) % 3])
            for j in range(3)] for i in range(3)]
    return [[cof[j][i] / d for j in range(3)] for i in range(3)]
