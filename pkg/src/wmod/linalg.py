"""Exact linear algebra over Q and F_p.

Matrices are plain lists of rows.  Nothing here ever touches floating
point: ranks over Q use fraction-free (Bareiss) elimination on integers,
ranks over F_p use modular inverses, and the solvers work on
``fractions.Fraction``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

Matrix = List[List[int]]


def _bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    m = [list(map(int, r)) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for i in range(rank + 1, len(m)):
            a = m[i][col]
            row_i, row_r = m[i], m[rank]
            # exact division is guaranteed by Sylvester's identity
            m[i] = [(p * row_i[j] - a * row_r[j]) // prev for j in range(ncols)]
        prev = p
        rank += 1
        if rank == len(m):
            break
    return rank


def _modp_rank(rows: Sequence[Sequence[int]], p: int) -> int:
    m = [[x % p for x in r] for r in rows]
    m = [r for r in m if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][col], -1, p)
        m[rank] = [(x * inv) % p for x in m[rank]]
        for i in range(rank + 1, len(m)):
            f = m[i][col]
            if f:
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def rank(rows: Sequence[Sequence[int]], p: int = 0) -> int:
    """Rank of an integer matrix over Q (``p == 0``) or over F_p."""
    if not rows or not len(rows[0]):
        return 0
    if p:
        return _modp_rank(rows, p)
    return _bareiss_rank(rows)


def independent_rows(rows: Sequence[Sequence[int]], p: int = 0) -> List[int]:
    """Indices of the rows kept by a greedy top-to-bottom independence scan.

    Row ``k`` is kept iff it is not in the span of the rows kept before it,
    so the result is the lexicographically first maximal independent set.
    """
    basis: List[Tuple[int, list]] = []  # (pivot column, reduced row)
    kept = []
    for idx, row in enumerate(rows):
        v = [x % p for x in row] if p else [Fraction(x) for x in row]
        for col, b in basis:
            f = v[col]
            if f:
                if p:
                    v = [(a - f * c) % p for a, c in zip(v, b)]
                else:
                    v = [a - f * c for a, c in zip(v, b)]
        col = next((j for j, x in enumerate(v) if x), None)
        if col is None:
            continue
        inv = pow(int(v[col]), -1, p) if p else 1 / v[col]
        v = [(x * inv) % p for x in v] if p else [x * inv for x in v]
        basis.append((col, v))
        kept.append(idx)
    return kept


def rref(rows: Sequence[Sequence], ncols: Optional[int] = None):
    """Reduced row echelon form over Q.

    Returns ``(reduced_rows, pivot_columns)``; zero rows are dropped.
    """
    m = [[Fraction(x) for x in r] for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots: List[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def solve(a: Sequence[Sequence], b: Sequence) -> Optional[Tuple[List[Fraction], List[List[Fraction]]]]:
    """Solve ``a x = b`` over Q.

    Returns ``(particular, kernel_basis)`` or ``None`` when inconsistent.
    The particular solution has every free variable set to zero.
    """
    n = len(a[0]) if a else 0
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    if not aug:
        return [Fraction(0)] * n, [_unit(n, j) for j in range(n)]
    red, pivots = rref(aug, n + 1)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for row, col in zip(red, pivots):
        x[col] = row[n]
    free = [j for j in range(n) if j not in pivots]
    kernel = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, col in zip(red, pivots):
            v[col] = -row[f]
        kernel.append(v)
    return x, kernel


def _unit(n, j):
    v = [Fraction(0)] * n
    v[j] = Fraction(1)
    return v
