"""Index combinatorics of single- and multivariable calculus towers.

Covers the truncation poset of tuples with bounded coordinate sum, the
floor truncation rules relating multivariable approximations to
single-variable ones, the wedge factor enumeration, per-stage tower
descriptors, layer decompositions of a wedge, and the stabilization
stages witnessing divergence on wedges of spheres.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np
from sympy import divisors, isprime

from .errors import PreconditionError
from .lie_words import (
    LieWord,
    MultidegreeBasis,
    basis_multidegree,
    evaluate,
    hall_basis,
    witt_total,
    word_to_string,
)
from .stable_complex import StableComplex, suspend, to_json_dict


@dataclass(frozen=True)
class TruncationPoset:
    """Tuples (a_1..a_k) with 0 <= a_i and a_1 + ... + a_k <= n,
    ordered componentwise."""

    n: int
    k: int
    tuples: tuple[tuple[int, ...], ...]

    def less_equal(self, a: tuple[int, ...], b: tuple[int, ...]) -> bool:
        return all(x <= y for x, y in zip(a, b))

    def __len__(self) -> int:
        return len(self.tuples)


def _sum_bounded_tuples(n: int, k: int) -> list[tuple[int, ...]]:
    if k == 0:
        return [()]
    out = []
    for head in range(n + 1):
        for tail in _sum_bounded_tuples(n - head, k - 1):
            out.append((head,) + tail)
    return out


def un_poset(n: int, k: int) -> TruncationPoset:
    """All coordinate tuples of sum <= n; count is C(n+k, k)."""
    if n < 0 or k < 1:
        raise PreconditionError("un_poset requires n >= 0 and k >= 1")
    tuples = sorted(_sum_bounded_tuples(n, k), key=lambda t: (sum(t), t[::-1]))
    return TruncationPoset(n, k, tuple(tuples))


@lru_cache(maxsize=None)
def _poset_array(n: int, k: int) -> np.ndarray:
    return np.array(_sum_bounded_tuples(n, k), dtype=np.int64)


def _check_positive_vector(vec: tuple[int, ...], what: str) -> tuple[int, ...]:
    vec = tuple(vec)
    if not vec or any(not isinstance(a, int) or a < 1 for a in vec):
        raise PreconditionError(f"{what} must be a nonempty tuple of positive integers, got {vec}")
    return vec


def multivar_truncation(vec_n: tuple[int, ...], vec_a: tuple[int, ...]) -> int:
    """min over i of floor(n_i / a_i): the single-variable truncation of a
    smash-power composite seen through a multivariable approximation."""
    vec_a = _check_positive_vector(vec_a, "vec_a")
    vec_n = tuple(vec_n)
    if len(vec_n) != len(vec_a):
        raise PreconditionError("vec_n and vec_a must have equal length")
    return min(n // a for n, a in zip(vec_n, vec_a))


def single_from_multi(n: int, vec_a: tuple[int, ...]) -> int:
    """Exhaustive maximum of multivar_truncation over the truncation poset.

    Equals floor(n / sum(vec_a)); the closed form is kept out of this
    path so the two can be compared as independent routes.
    """
    vec_a = _check_positive_vector(vec_a, "vec_a")
    if n < 0:
        raise PreconditionError("single_from_multi requires n >= 0")
    tuples = _poset_array(n, len(vec_a))
    mins = (tuples // np.array(vec_a, dtype=np.int64)).min(axis=1)
    return int(mins.max())


def hm_factors(
    complexes: list[StableComplex], max_length: int
) -> list[tuple[LieWord, StableComplex]]:
    """Wedge factors (w, suspended w-evaluation) for |w| <= max_length."""
    if not complexes:
        raise PreconditionError("need at least one complex")
    if any(x.is_zero() for x in complexes):
        raise PreconditionError("factors of the wedge must be nonzero")
    k = len(complexes)
    return [(w, suspend(evaluate(w, complexes), 1)) for w in hall_basis(k, max_length)]


@dataclass(frozen=True)
class TowerFactor:
    word: LieWord
    trunc: int
    factor_complex: StableComplex
    stab_stage: int | None


@dataclass(frozen=True)
class TowerDescriptor:
    """One stage of the tower on a wedge: the factor list with truncations."""

    stage: int
    prime: int
    height: int
    factors: tuple[TowerFactor, ...]


def _sphere_dims(complexes: list[StableComplex]) -> tuple[int, ...] | None:
    dims = []
    for x in complexes:
        if not x.is_single_sphere():
            return None
        d = x.cells[0][0].dim
        if d < 1:
            return None
        dims.append(d)
    return tuple(dims)


def tower_stage(n: int, complexes: list[StableComplex], height: int = 1) -> TowerDescriptor:
    """Stage-n descriptor: every word with floor(n/|w|) >= 1 contributes a
    factor truncated at floor(n/|w|).

    Stabilization stages are attached when all inputs are single spheres
    of dimension >= 1 (the parity rule needs a sphere target), else None.
    """
    if n < 1:
        raise PreconditionError("tower stage requires n >= 1")
    if not complexes:
        raise PreconditionError("need at least one complex")
    if any(x.is_zero() for x in complexes):
        raise PreconditionError("factors of the wedge must be nonzero")
    prime = complexes[0].prime
    dims = _sphere_dims(complexes)
    factors = []
    for w in hall_basis(len(complexes), n):
        stab = stabilization_stage(w, dims, prime, height) if dims is not None else None
        factors.append(
            TowerFactor(
                word=w,
                trunc=n // w.length,
                factor_complex=suspend(evaluate(w, complexes), 1),
                stab_stage=stab,
            )
        )
    return TowerDescriptor(n, prime, height, tuple(factors))


@dataclass(frozen=True)
class WedgeLayerTerm:
    """One factor of a wedge layer: denotes D_divisor applied to target."""

    composition: tuple[int, ...]
    divisor: int
    word: LieWord
    target: StableComplex


@dataclass(frozen=True)
class LayerDecomposition:
    n: int
    terms: tuple[WedgeLayerTerm, ...]


def _compositions(n: int, k: int) -> list[tuple[int, ...]]:
    return [t for t in _sum_bounded_tuples(n, k) if sum(t) == n]


def wedge_layer_decomposition(n: int, complexes: list[StableComplex]) -> LayerDecomposition:
    """Layer n of a wedge as indexed smash-product layers.

    Terms are triples (composition, d, w) with d dividing every nonzero
    part and w a basis word of multidegree composition/d; the derivative
    index of the target equals d.
    """
    if n < 1:
        raise PreconditionError("layer index must be >= 1")
    if not complexes:
        raise PreconditionError("need at least one complex")
    k = len(complexes)
    terms = []
    for comp in sorted(_compositions(n, k), reverse=True):
        g = 0
        for part in comp:
            g = part if g == 0 else np.gcd(g, part)
        for d in divisors(int(g)):
            for w in basis_multidegree(tuple(p // d for p in comp)).words:
                terms.append(
                    WedgeLayerTerm(
                        composition=comp,
                        divisor=d,
                        word=w,
                        target=suspend(evaluate(w, complexes), 1),
                    )
                )
    return LayerDecomposition(n, tuple(terms))


def stabilization_stage(
    word: LieWord,
    dims: tuple[int, ...],
    prime: int,
    height: int,
    odd_single: bool = True,
) -> int:
    """Tower stage at which a sphere-target wedge factor stops moving.

    The factor target is the sphere of dimension 1 + sum n_i d_i.  An
    odd-dimensional target stabilizes at |w| * p^h, an even one at
    2 * |w| * p^h; `odd_single` flips the parity assignment.
    """
    dims = tuple(dims) if dims is not None else ()
    if len(dims) != word.arity:
        raise PreconditionError("need one sphere dimension per generator")
    if any(not isinstance(d, int) or d < 1 for d in dims):
        raise PreconditionError("stabilization stages are defined for spheres S^d with d >= 1")
    if not isprime(prime):
        raise PreconditionError(f"ambient prime must be prime, got {prime!r}")
    if height < 1:
        raise PreconditionError("height must be >= 1")
    target_dim = 1 + sum(n * d for n, d in zip(word.multidegree, dims))
    single = (target_dim % 2 == 1) == odd_single
    stage = word.length * prime**height
    return stage if single else 2 * stage


def wedge_divergence_report(
    dims: tuple[int, ...], prime: int, height: int, max_length: int
) -> dict:
    """Divergence witness for a wedge of spheres.

    Lists the stabilization stage of every factor with |w| <= max_length,
    exhibits a strictly increasing subsequence of stages (greedy over the
    per-length maxima, hence unbounded), and certifies that every length
    carries at least one word via the Witt counting formula.
    """
    dims = tuple(dims)
    if any(not isinstance(d, int) or d < 1 for d in dims) or not dims:
        raise PreconditionError("dims must be sphere dimensions >= 1")
    if max_length < 1:
        raise PreconditionError("max_length must be >= 1")
    k = len(dims)
    report: dict = {
        "dims": list(dims),
        "prime": prime,
        "height": height,
        "max_length": max_length,
        "generators": k,
        "applicable": k >= 2,
    }
    if k < 2:
        report["note"] = (
            "divergence concerns wedges of at least two spheres; a single sphere "
            "has a finite tower, constant from stage p^h or 2p^h on"
        )
    entries = []
    stage_by_length: dict[int, list[int]] = {}
    complexes = [StableComplex.sphere(d) for d in dims]
    for w in hall_basis(k, max_length):
        target_dim = 1 + sum(n * d for n, d in zip(w.multidegree, dims))
        stage = stabilization_stage(w, dims, prime, height)
        entries.append(
            {
                "word": word_to_string(w),
                "multidegree": list(w.multidegree),
                "length": w.length,
                "target": to_json_dict(suspend(evaluate(w, complexes), 1)),
                "target_dim": target_dim,
                "stab_stage": stage,
            }
        )
        stage_by_length.setdefault(w.length, []).append(stage)
    report["entries"] = entries
    report["word_counts"] = {str(m): len(v) for m, v in sorted(stage_by_length.items())}

    increasing: list[int] = []
    for m in sorted(stage_by_length):
        s = max(stage_by_length[m])
        if not increasing or s > increasing[-1]:
            increasing.append(s)
    report["increasing_stages"] = increasing

    witt_span = max(max_length, 12)
    witt_totals = {str(m): witt_total(k, m) for m in range(1, witt_span + 1)}
    report["witt_totals"] = witt_totals
    all_lengths_populated = all(v > 0 for v in witt_totals.values()) if k >= 2 else False
    report["all_lengths_populated"] = all_lengths_populated
    report["diverges"] = bool(k >= 2 and all_lengths_populated and len(increasing) >= 1)
    report["citations"] = [
        "tower of a single sphere is finite in periodic homotopy, constant from "
        "stage p^h or 2p^h depending on the parity of its dimension (Arone-Mahowald)",
        "each wedge factor indexed by a basis word w therefore stops moving at "
        "stage |w|p^h or 2|w|p^h; these stages are unbounded over the basis",
        "every periodic homotopy group of a sphere of dimension >= 2 is nonzero in "
        "infinitely many degrees, so infinitely many factors contribute",
    ]
    return report


# serialization helpers -------------------------------------------------


def tower_to_json(desc: TowerDescriptor) -> dict:
    return {
        "stage": desc.stage,
        "prime": desc.prime,
        "height": desc.height,
        "factors": [
            {
                "word": word_to_string(f.word),
                "multidegree": list(f.word.multidegree),
                "length": f.word.length,
                "target": to_json_dict(f.factor_complex),
                "trunc": f.trunc,
                "stab_stage": f.stab_stage,
            }
            for f in desc.factors
        ],
    }


def layers_to_json(dec: LayerDecomposition) -> dict:
    return {
        "n": dec.n,
        "terms": [
            {
                "composition": list(t.composition),
                "divisor": t.divisor,
                "word": word_to_string(t.word),
                "multidegree": list(t.word.multidegree),
                "target": to_json_dict(t.target),
            }
            for t in dec.terms
        ],
    }
