"""Exact Gaussian elimination over the prime fields F_p.

Matrices are handled column-sparse: a column is a dict mapping row index
to a nonzero residue.  Reduction keeps, per pivot row, the first column
found with that row as its highest nonzero entry and cancels later
columns against it.  This is plain column elimination; ranks are exact.
"""

from __future__ import annotations

from typing import Iterable

from sympy import isprime

from .errors import PreconditionError

Column = dict[int, int]


def _check_prime(p: int) -> int:
    if not isinstance(p, int) or not isprime(p):
        raise PreconditionError(f"field characteristic must be prime, got {p!r}")
    return p


def column_reduce(columns: Iterable[Column], p: int) -> tuple[int, set[int]]:
    """Reduce columns over F_p; return (rank, set of pivot rows).

    Consumes the input columns (they are mutated in place).
    """
    _check_prime(p)
    pivots: dict[int, Column] = {}
    rank = 0
    for col in columns:
        for r in list(col):
            col[r] %= p
            if not col[r]:
                del col[r]
        while col:
            low = max(col)
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = col
                rank += 1
                break
            c = col[low] * pow(piv[low], -1, p) % p
            for r, v in piv.items():
                nv = (col.get(r, 0) - c * v) % p
                if nv:
                    col[r] = nv
                else:
                    col.pop(r, None)
        # a column emptying out is linearly dependent; nothing to record
    return rank, set(pivots)


def rank_mod_p(rows: Iterable[Iterable[int]], p: int) -> int:
    """Rank of a dense row-major matrix over F_p."""
    _check_prime(p)
    columns: dict[int, Column] = {}
    n_cols = 0
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            n_cols = max(n_cols, j + 1)
            v = int(v) % p
            if v:
                columns.setdefault(j, {})[i] = v
    rank, _ = column_reduce((columns[j] for j in sorted(columns)), p)
    return rank
