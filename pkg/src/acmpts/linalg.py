"""Exact rank of integer matrices by fraction-free elimination.

Bareiss one-step elimination keeps every intermediate entry an integer
(each is a minor of the input up to sign), so ranks over the rationals
come out exact with no tolerance questions.  Matrices here are small:
evaluation matrices have at most a few dozen rows and boundary matrices
of desk-scale complexes stay near 100x100.
"""

from __future__ import annotations

from typing import Sequence


def rank_int(matrix: Sequence[Sequence[int]]) -> int:
    """Rank over Q of an integer matrix given as a sequence of rows."""
    m = [list(row) for row in matrix]
    nrows = len(m)
    if nrows == 0:
        return 0
    ncols = len(m[0])
    if any(len(row) != ncols for row in m):
        raise ValueError("ragged matrix")
    if ncols == 0:
        return 0

    rank = 0
    prev = 1
    for col in range(ncols):
        pivot_row = None
        for i in range(rank, nrows):
            if m[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != rank:
            m[rank], m[pivot_row] = m[pivot_row], m[rank]
        piv = m[rank][col]
        top = m[rank]
        for i in range(rank + 1, nrows):
            row = m[i]
            factor = row[col]
            # Applied to every row, zero factor included, so that entries
            # stay minors of the input and the division stays exact.
            for j in range(col + 1, ncols):
                row[j] = (row[j] * piv - factor * top[j]) // prev
            row[col] = 0
        prev = piv
        rank += 1
        if rank == nrows:
            break
    return rank
