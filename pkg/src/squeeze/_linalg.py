"""Exact elimination backends (flint) shared by the gin engine and Hochster's formula."""

from __future__ import annotations

from typing import Sequence

import flint

PRIME = 2147483647

FIELDS = ("q", "p")


def _check_field(field: str) -> None:
    if field not in FIELDS:
        raise ValueError(f"field must be one of {FIELDS}, got {field!r}")


def pivot_columns(rows: Sequence[Sequence[int]], ncols: int, field: str = "q") -> list[int]:
    """Pivot columns of the row echelon form of an integer matrix.

    With columns sorted from the largest monomial to the smallest these are
    exactly the leading monomials occurring in the row span.
    """
    _check_field(field)
    if not rows or ncols == 0:
        return []
    if field == "q":
        R, _den, rank = flint.fmpz_mat([list(r) for r in rows]).rref()
    else:
        R, rank = flint.nmod_mat([[int(x) % PRIME for x in r] for r in rows], PRIME).rref()
    pivots = []
    col = 0
    for i in range(rank):
        while R[i, col] == 0:
            col += 1
        pivots.append(col)
        col += 1
    return pivots


def rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals."""
    if not rows or not rows[0]:
        return 0
    return flint.fmpz_mat([list(r) for r in rows]).rank()


def det(rows: Sequence[Sequence[int]]) -> int:
    return int(flint.fmpz_mat([list(r) for r in rows]).det())
