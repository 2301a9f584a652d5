"""Exact rank and kernel vectors of integer matrices by fraction-free elimination.

>>> integer_rank([[1, 2], [2, 4], [0, 1]])
2
>>> kernel_vector([[1, -1, 0], [2, -2, 0], [0, 0, 1]])
(1, 1, 0)
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


def echelon(rows: Iterable[Sequence[int]]) -> tuple[list[list[int]], list[int]]:
    """Bareiss elimination; returns the pivot rows and their pivot columns.

    Every intermediate entry is a minor of the input, so each division by the
    previous pivot is exact and no fractions appear.
    """
    # duplicate rows never change the row space
    matrix = [list(r) for r in dict.fromkeys(tuple(r) for r in rows)]
    if not matrix:
        return [], []
    ncols = len(matrix[0])
    pivots: list[int] = []
    top = 0
    previous = 1
    for col in range(ncols):
        pivot = next((i for i in range(top, len(matrix)) if matrix[i][col]), None)
        if pivot is None:
            continue
        matrix[top], matrix[pivot] = matrix[pivot], matrix[top]
        p_row = matrix[top]
        p = p_row[col]
        for i in range(top + 1, len(matrix)):
            row = matrix[i]
            a = row[col]
            for j in range(col + 1, ncols):
                row[j] = (p * row[j] - a * p_row[j]) // previous
            row[col] = 0
        # rows that became zero carry no information for later pivots
        matrix[top + 1 :] = [r for r in matrix[top + 1 :] if any(r)]
        previous = p
        pivots.append(col)
        top += 1
        if top == len(matrix):
            break
    return matrix[:top], pivots


def integer_rank(rows: Iterable[Sequence[int]]) -> int:
    return len(echelon(rows)[1])


def kernel_vector(rows: Iterable[Sequence[int]], ncols: int | None = None) -> tuple[int, ...] | None:
    """A primitive integer vector v with M v = 0, or None when the columns are independent.

    The first free column gets coefficient 1 before scaling; the result has
    coprime entries and a positive first nonzero entry.
    """
    rows = [list(r) for r in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    reduced, pivots = echelon(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    if not free:
        return None
    x = [Fraction(0)] * ncols
    x[free[0]] = Fraction(1)
    for row, col in reversed(list(zip(reduced, pivots))):
        total = sum(Fraction(row[j]) * x[j] for j in range(col + 1, ncols))
        x[col] = Fraction(-total) / row[col]
    scale = 1
    for v in x:
        scale = scale * v.denominator // gcd(scale, v.denominator)
    ints = [int(v * scale) for v in x]
    g = 0
    for v in ints:
        g = gcd(g, v)
    ints = [v // g for v in ints]
    if next(v for v in ints if v) < 0:
        ints = [-v for v in ints]
    return tuple(ints)


def annihilates(rows: Iterable[Sequence[int]], vector: Sequence[int]) -> bool:
    return all(sum(a * b for a, b in zip(row, vector)) == 0 for row in rows)
