"""Ordered basis of the free Lie algebra on k generators.

Basis elements are Lyndon words over the alphabet x1 < x2 < ... < xk
with their standard (right) bracketing, ordered by (length, lexicographic
foliage).  Enumeration uses Duval's algorithm; the classical Witt
necklace formula serves as an independent counting oracle.  Evaluating a
word on a tuple of complexes smashes the factors in foliage order, so
the result depends only on the multidegree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial, gcd, prod

from sympy import divisors, mobius

from . import config
from .errors import BoundError, PreconditionError
from .stable_complex import StableComplex, smash

# A bracket tree is an int leaf (1-based letter) or a (left, right) pair.
Tree = int | tuple


def tree_foliage(tree: Tree) -> tuple[int, ...]:
    if isinstance(tree, int):
        return (tree,)
    left, right = tree
    return tree_foliage(left) + tree_foliage(right)


@dataclass(frozen=True)
class LieWord:
    """Bracketed word over `arity` generators."""

    tree: Tree
    arity: int

    def __post_init__(self) -> None:
        letters = tree_foliage(self.tree)
        if any(not 1 <= i <= self.arity for i in letters):
            raise PreconditionError(f"letters of {letters} outside 1..{self.arity}")

    @property
    def foliage(self) -> tuple[int, ...]:
        return tree_foliage(self.tree)

    @property
    def length(self) -> int:
        return len(self.foliage)

    @property
    def multidegree(self) -> tuple[int, ...]:
        fol = self.foliage
        return tuple(fol.count(i) for i in range(1, self.arity + 1))

    def __str__(self) -> str:
        return word_to_string(self)


def word_to_string(word: LieWord) -> str:
    """Bracket string form, e.g. "[x1,[x1,x2]]"."""

    def render(tree: Tree) -> str:
        if isinstance(tree, int):
            return f"x{tree}"
        left, right = tree
        return f"[{render(left)},{render(right)}]"

    return render(word.tree)


def _duval_lyndon_words(k: int, max_length: int) -> list[tuple[int, ...]]:
    """All Lyndon words over {1..k} of length <= max_length, lex order."""
    words = []
    w = [1]
    while w:
        words.append(tuple(w))
        # extend periodically to max_length, then strip maximal letters
        w = [w[i % len(w)] for i in range(max_length)]
        while w and w[-1] == k:
            w.pop()
        if w:
            w[-1] += 1
    return words


def standard_bracketing(word: tuple[int, ...]) -> Tree:
    """Right standard factorization, applied recursively.

    For a Lyndon word w of length >= 2 the lexicographically smallest
    proper suffix v is Lyndon and w = uv with u Lyndon; the bracketing
    is then (u's tree, v's tree).
    """
    if len(word) == 1:
        return word[0]
    cut = min(range(1, len(word)), key=lambda i: word[i:])
    return (standard_bracketing(word[:cut]), standard_bracketing(word[cut:]))


@lru_cache(maxsize=None)
def _words_of_length(k: int, length: int) -> tuple[LieWord, ...]:
    if k > config.max_generators():
        raise BoundError(
            f"arity {k} exceeds the configured generator bound {config.max_generators()} "
            "(override with TOWERCALC_MAX_GENERATORS)"
        )
    words = [w for w in _duval_lyndon_words(k, length) if len(w) == length]
    words.sort()
    return tuple(LieWord(standard_bracketing(w), k) for w in words)


def hall_basis(k: int, max_length: int) -> list[LieWord]:
    """Basis words of length <= max_length, ordered by (length, foliage)."""
    if k < 1 or max_length < 1:
        raise PreconditionError("hall_basis requires k >= 1 and max_length >= 1")
    out: list[LieWord] = []
    for length in range(1, max_length + 1):
        out.extend(_words_of_length(k, length))
    return out


@lru_cache(maxsize=None)
def _basis_index(k: int, length: int) -> dict[tuple[int, ...], tuple[LieWord, ...]]:
    grouped: dict[tuple[int, ...], list[LieWord]] = {}
    for w in _words_of_length(k, length):
        grouped.setdefault(w.multidegree, []).append(w)
    return {deg: tuple(ws) for deg, ws in grouped.items()}


@dataclass(frozen=True)
class MultidegreeBasis:
    """Basis words of one fixed multidegree, in basis order."""

    degree: tuple[int, ...]
    words: tuple[LieWord, ...]

    def __len__(self) -> int:
        return len(self.words)


def _check_degree(degree: tuple[int, ...]) -> tuple[int, ...]:
    degree = tuple(degree)
    if not degree or any(not isinstance(n, int) or n < 0 for n in degree):
        raise PreconditionError(f"multidegree entries must be nonnegative integers, got {degree}")
    if not any(degree):
        raise PreconditionError("multidegree must not be identically zero")
    return degree


def basis_multidegree(degree: tuple[int, ...]) -> MultidegreeBasis:
    """All basis words with the given letter counts."""
    degree = _check_degree(degree)
    k, total = len(degree), sum(degree)
    return MultidegreeBasis(degree, _basis_index(k, total).get(degree, ()))


def witt_count(degree: tuple[int, ...]) -> int:
    """Necklace/Witt count of basis words of one multidegree.

    (1/n) * sum over d | gcd(degree) of mu(d) * (n/d)! / prod (n_i/d)!,
    with n the total degree.  Independent of the enumeration path.
    """
    degree = _check_degree(degree)
    n = sum(degree)
    g = gcd(*degree) if len(degree) > 1 else degree[0]
    total = 0
    for d in divisors(g):
        total += int(mobius(d)) * factorial(n // d) // prod(factorial(ni // d) for ni in degree)
    return total // n


def witt_total(k: int, length: int) -> int:
    """Number of basis words of given total length over k generators."""
    if k < 1 or length < 1:
        raise PreconditionError("witt_total requires k >= 1 and length >= 1")
    return sum(int(mobius(d)) * k ** (length // d) for d in divisors(length)) // length


def evaluate(word: LieWord, complexes: list[StableComplex]) -> StableComplex:
    """Smash the complexes in foliage order: the bracket acts as a smash."""
    if len(complexes) != word.arity:
        raise PreconditionError(
            f"word over {word.arity} generators evaluated on {len(complexes)} complexes"
        )
    out = StableComplex.sphere(0, complexes[0].prime)
    for letter in word.foliage:
        out = smash(out, complexes[letter - 1])
    return out
