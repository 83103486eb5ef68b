"""Exact linear algebra over Z, Q, Z[tau] and Q(tau).

Rank and determinant use fraction-free (Bareiss) elimination so entries stay
in the coefficient ring.  Kernels and inverses go through the fraction field.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from .scalar import GoldenRational, exact_div, from_field, to_field


def _bareiss(rows: Sequence[Sequence]) -> tuple[list[list], list[int], int]:
    """Fraction-free row echelon form; returns (matrix, pivot columns, swaps)."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    prev = 1
    r = 0
    pivots: list[int] = []
    swaps = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
            swaps += 1
        piv = m[r][c]
        for i in range(r + 1, nrows):
            lead = m[i][c]
            row_i, row_r = m[i], m[r]
            for j in range(c + 1, ncols):
                row_i[j] = exact_div(row_i[j] * piv - lead * row_r[j], prev)
            row_i[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return m, pivots, swaps


def rank(rows: Sequence[Sequence]) -> int:
    """Rank of a matrix given by rows (ring or field entries)."""
    if not rows:
        return 0
    return len(_bareiss(rows)[1])


def det(rows: Sequence[Sequence]):
    """Determinant of a square matrix, computed in the coefficient ring."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    m, pivots, swaps = _bareiss(rows)
    if len(pivots) < n:
        return 0 * rows[0][0]
    d = m[n - 1][n - 1]
    return -d if swaps % 2 else d


def is_independent(vectors: Sequence[Sequence]) -> bool:
    return rank(vectors) == len(vectors)


def rref(rows: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form over the fraction field."""
    m = [[to_field(x) for x in r] for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def clear_denominators(vec: Sequence) -> tuple:
    """Scale a field vector by a positive integer so it lies in the ring."""
    dens = []
    for x in vec:
        if isinstance(x, GoldenRational):
            dens.append(x.den)
        elif isinstance(x, Fraction):
            dens.append(x.denominator)
    scale = lcm(*dens) if dens else 1
    return tuple(from_field(x * scale) for x in vec)


def kernel(rows: Sequence[Sequence], ncols: int) -> list[tuple]:
    """Ring-valued basis of ``{f : M f = 0}`` for the matrix with the given rows."""
    if not rows:
        return [tuple(1 if i == j else 0 for i in range(ncols)) for j in range(ncols)]
    m, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [to_field(0)] * ncols
        vec[fc] = to_field(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -m[r][fc]
        basis.append(clear_denominators(vec))
    return basis


def inverse(rows: Sequence[Sequence]) -> list[list]:
    """Inverse over the fraction field (entries dropped to the ring when possible)."""
    n = len(rows)
    aug = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(rows)]
    m, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [[from_field(x) for x in m[i][n:]] for i in range(n)]


def mat_vec(rows: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(sum((a * b for a, b in zip(r, v)), 0) for r in rows)

