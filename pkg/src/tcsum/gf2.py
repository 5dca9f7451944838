"""Dense GF(2) linear algebra on bit-packed rows.

A row is a Python ``int`` whose bit ``j`` is the entry in column ``j``.
"""

from __future__ import annotations


def rref(rows: list[int]) -> tuple[list[int], list[int]]:
    """Reduced row echelon form.

    Returns ``(reduced_rows, pivots)`` where ``pivots[i]`` is the column of
    the leading bit of ``reduced_rows[i]``.  The pivot of a row is its
    lowest set column, and pivots are increasing.
    """
    work = [r for r in rows if r]
    reduced: list[int] = []
    pivots: list[int] = []
    while work:
        # pick the row with the lowest leading column
        best = min(range(len(work)), key=lambda i: work[i] & -work[i])
        row = work.pop(best)
        low = row & -row
        work = [r ^ row if r & low else r for r in work]
        work = [r for r in work if r]
        reduced = [r ^ row if r & low else r for r in reduced]
        reduced.append(row)
        pivots.append(low.bit_length() - 1)
    return reduced, pivots


def rank(rows: list[int]) -> int:
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            low = r & -r
            if low in basis:
                r ^= basis[low]
            else:
                basis[low] = r
                break
    return len(basis)


def nullspace(rows: list[int], ncols: int) -> list[int]:
    """Basis of ``{v : popcount(row & v) is even for every row}``.

    One vector per free column ``f`` (in increasing order): bit ``f`` set,
    plus the pivot columns whose reduced row contains ``f``.
    """
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = 1 << f
        for row, p in zip(reduced, pivots):
            if row >> f & 1:
                v |= 1 << p
        basis.append(v)
    return basis


def apply(rows: list[int], v: int) -> int:
    """Matrix-vector product: bit ``i`` of the result is ``<rows[i], v>``."""
    out = 0
    for i, r in enumerate(rows):
        if (r & v).bit_count() & 1:
            out |= 1 << i
    return out


def in_span(basis: list[int], v: int) -> bool:
    return rank(basis + [v]) == rank(basis)
