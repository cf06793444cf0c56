"""Formal finite wedges of sphere and mod-p Moore cells.

This is the closed symbolic universe of the calculator: a complex is a
multiset of cells, each either a sphere S^m or a Moore spectrum
M^m = S^m/p (bottom cell in dimension m, top cell in m+1).  Wedge,
suspension and smash keep results inside the universe via the cell rules

    S^a ^ S^b = S^(a+b)
    S^a ^ M^b = M^(a+b)
    M^a ^ M^b = M^(a+b) v M^(a+b+1)

extended bilinearly over wedges.  Dimensions may be negative (these are
spectra), multiplicities are strictly positive, and every complex is
kept in a normal form (sphere cells before Moore cells, ascending
dimension, equal cells merged) so equality is plain structural equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from sympy import isprime

from .errors import PreconditionError, PrimeMismatchError, SchemaError

SPHERE = "sphere"
MOORE = "moore"

DEFAULT_PRIME = 3


@dataclass(frozen=True, order=True)
class Cell:
    """A single stable cell: kind is "sphere" or "moore", dim any integer."""

    kind: str
    dim: int

    def __post_init__(self) -> None:
        if self.kind not in (SPHERE, MOORE):
            raise PreconditionError(f"unknown cell kind {self.kind!r}")
        if not isinstance(self.dim, int):
            raise PreconditionError(f"cell dimension must be an integer, got {self.dim!r}")

    def _sort_key(self) -> tuple[int, int]:
        # normal form: sphere cells before moore cells, then ascending dim
        return (0 if self.kind == SPHERE else 1, self.dim)

    def __str__(self) -> str:
        return f"{'S' if self.kind == SPHERE else 'M'}^{self.dim}"


def _validate_prime(p: int) -> int:
    if not isinstance(p, int) or p == 2 or not isprime(p):
        raise PreconditionError(f"configured prime must be an odd prime, got {p!r}")
    return p


@dataclass(frozen=True)
class StableComplex:
    """Finite wedge of cells with multiplicities, in normal form.

    The empty multiset is the zero (contractible) complex.  All Moore
    cells implicitly carry the single configured odd prime.
    """

    prime: int
    cells: tuple[tuple[Cell, int], ...]

    @staticmethod
    def from_cells(prime: int, cells: Iterable[tuple[Cell, int]]) -> StableComplex:
        _validate_prime(prime)
        merged: dict[Cell, int] = {}
        for cell, mult in cells:
            if not isinstance(mult, int) or mult <= 0:
                raise PreconditionError(f"multiplicity must be a positive integer, got {mult!r}")
            merged[cell] = merged.get(cell, 0) + mult
        normal = tuple(sorted(merged.items(), key=lambda cm: cm[0]._sort_key()))
        return StableComplex(prime, normal)

    @staticmethod
    def zero(prime: int = DEFAULT_PRIME) -> StableComplex:
        return StableComplex.from_cells(prime, ())

    @staticmethod
    def sphere(dim: int, prime: int = DEFAULT_PRIME, mult: int = 1) -> StableComplex:
        return StableComplex.from_cells(prime, [(Cell(SPHERE, dim), mult)])

    @staticmethod
    def moore(dim: int, prime: int = DEFAULT_PRIME, mult: int = 1) -> StableComplex:
        return StableComplex.from_cells(prime, [(Cell(MOORE, dim), mult)])

    def is_zero(self) -> bool:
        return not self.cells

    def multiplicity(self, cell: Cell) -> int:
        for c, m in self.cells:
            if c == cell:
                return m
        return 0

    def cell_count(self) -> int:
        """Total number of cells counted with multiplicity."""
        return sum(m for _, m in self.cells)

    def is_single_sphere(self) -> bool:
        return len(self.cells) == 1 and self.cells[0][0].kind == SPHERE and self.cells[0][1] == 1

    def has_sphere_cells(self) -> bool:
        return any(c.kind == SPHERE for c, _ in self.cells)

    def __iter__(self) -> Iterator[tuple[Cell, int]]:
        return iter(self.cells)

    def __str__(self) -> str:
        return format_complex(self)


def _shared_prime(a: StableComplex, b: StableComplex) -> int:
    if a.prime != b.prime:
        raise PrimeMismatchError(f"complexes carry different primes ({a.prime} vs {b.prime})")
    return a.prime


def wedge(a: StableComplex, b: StableComplex) -> StableComplex:
    """Multiset union: multiplicities add."""
    p = _shared_prime(a, b)
    return StableComplex.from_cells(p, list(a.cells) + list(b.cells))


def wedge_all(complexes: Iterable[StableComplex], prime: int = DEFAULT_PRIME) -> StableComplex:
    out = StableComplex.zero(prime)
    for c in complexes:
        out = wedge(out, c)
    return out


def suspend(a: StableComplex, s: int) -> StableComplex:
    """Shift every cell dimension by s (s may be negative)."""
    return StableComplex.from_cells(a.prime, [(Cell(c.kind, c.dim + s), m) for c, m in a.cells])


def _smash_cells(a: Cell, b: Cell) -> list[Cell]:
    d = a.dim + b.dim
    if a.kind == SPHERE and b.kind == SPHERE:
        return [Cell(SPHERE, d)]
    if a.kind == MOORE and b.kind == MOORE:
        return [Cell(MOORE, d), Cell(MOORE, d + 1)]
    return [Cell(MOORE, d)]


def smash(a: StableComplex, b: StableComplex) -> StableComplex:
    """Bilinear extension of the cell smash rules; unit is S^0."""
    p = _shared_prime(a, b)
    acc: dict[Cell, int] = {}
    for ca, ma in a.cells:
        for cb, mb in b.cells:
            for cell in _smash_cells(ca, cb):
                acc[cell] = acc.get(cell, 0) + ma * mb
    return StableComplex.from_cells(p, acc.items())


def smash_power(a: StableComplex, k: int) -> StableComplex:
    """k-fold iterated smash; k = 0 gives the unit S^0."""
    if not isinstance(k, int) or k < 0:
        raise PreconditionError(f"smash power exponent must be a nonnegative integer, got {k!r}")
    out = StableComplex.sphere(0, a.prime)
    for _ in range(k):
        out = smash(out, a)
    return out


def format_complex(a: StableComplex) -> str:
    """Compact form like "S^3 v 2*M^16"; "0" for the zero complex."""
    if a.is_zero():
        return "0"
    parts = []
    for cell, mult in a.cells:
        parts.append(str(cell) if mult == 1 else f"{mult}*{cell}")
    return " v ".join(parts)


def to_json_dict(a: StableComplex) -> dict:
    return {
        "prime": a.prime,
        "cells": [{"kind": c.kind, "dim": c.dim, "mult": m} for c, m in a.cells],
    }


def from_json_dict(data: object) -> StableComplex:
    """Parse the wire form {"prime": int, "cells": [{kind, dim, mult}]}.

    Field names are fixed; unknown fields are rejected so round-trips
    stay byte-stable.  Duplicate cells merge during normalization.
    """
    if not isinstance(data, dict):
        raise SchemaError("complex must be a JSON object")
    extra = set(data) - {"prime", "cells"}
    if extra:
        raise SchemaError(f"unknown complex fields: {sorted(extra)}")
    if "prime" not in data or "cells" not in data:
        raise SchemaError('complex requires "prime" and "cells" fields')
    prime, raw_cells = data["prime"], data["cells"]
    if not isinstance(prime, int):
        raise SchemaError('"prime" must be an integer')
    if not isinstance(raw_cells, list):
        raise SchemaError('"cells" must be an array')
    cells = []
    for entry in raw_cells:
        if not isinstance(entry, dict) or set(entry) != {"kind", "dim", "mult"}:
            raise SchemaError('each cell must be an object with exactly "kind", "dim", "mult"')
        kind, dim, mult = entry["kind"], entry["dim"], entry["mult"]
        if kind not in (SPHERE, MOORE):
            raise SchemaError(f'cell kind must be "sphere" or "moore", got {kind!r}')
        if not isinstance(dim, int) or not isinstance(mult, int) or mult <= 0:
            raise SchemaError("cell dim must be an integer and mult a positive integer")
        cells.append((Cell(kind, dim), mult))
    try:
        return StableComplex.from_cells(prime, cells)
    except PreconditionError as exc:
        raise SchemaError(str(exc)) from exc
