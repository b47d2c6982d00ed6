"""Brute-force cellular homology of the polyhedral-product models built
from a simplicial complex, and the wedge-decomposition predictions they
must match.

The real model is the cubical subcomplex of the m-cube whose cells fix
each coordinate to an endpoint or leave it free, with free-coordinate set a
face; it realizes the polyhedral product of (interval, endpoint-pair)
pairs.  The complex model has one cell per (face, disjoint index set) pair
in dimension 2|face| + |set| and realizes the moment-angle complex built
from (disc, circle) pairs; its boundary is the transpose of the Koszul
model differential, so the two share the generator bookkeeping.

The predicted homology is a degreewise direct sum of the reduced homology
of induced subcomplexes, shifted by 1 for the real model and by |I| + 1
for the complex one; the empty index set only ever contributes the
basepoint and is skipped.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .complexes import SimplicialComplex
from .errors import NotApplicable, Unsupported
from .homology import (ChainData, Coefficients, HomologyGroups, INTEGERS,
                       build_chain_data, direct_sum, homology_of_chain_data,
                       reduced_homology)
from .structure import is_sequentially_cm
from .tor import sigma_omega_generators

MAX_MODEL_VERTICES = 8

_AUG = ("augmentation",)


def _check_size(K: SimplicialComplex):
    if K.is_void:
        raise ValueError("polyhedral-product models need a NonVoid complex")
    if K.m > MAX_MODEL_VERTICES:
        raise Unsupported(
            f"cell models are capped at {MAX_MODEL_VERTICES} ambient indices; got {K.m}")


def real_model_chain_data(K: SimplicialComplex) -> ChainData:
    """Cubical cells (free set, fixed endpoint assignment), augmented."""
    _check_size(K)
    cells: dict[int, list] = {-1: [_AUG]}
    for sigma in K.faces():
        rest = [v for v in K.ambient if v not in sigma]
        dim = len(sigma)
        for bits in itertools.product((0, 1), repeat=len(rest)):
            cells.setdefault(dim, []).append((sigma, tuple(zip(rest, bits))))

    def boundary_of(cell, n):
        if n == 0:
            return [(_AUG, 1)]
        sigma, fixed = cell
        terms = []
        for k, v in enumerate(sigma):
            smaller = sigma[:k] + sigma[k + 1:]
            sign = -1 if k % 2 else 1
            for bit, orient in ((1, 1), (0, -1)):
                new_fixed = tuple(sorted(fixed + ((v, bit),)))
                terms.append(((smaller, new_fixed), sign * orient))
        return terms

    return build_chain_data(cells, boundary_of)


def complex_model_chain_data(K: SimplicialComplex) -> ChainData:
    """Cells (face, disjoint index set) in dimension 2|face| + |set|; the
    boundary moves one face vertex into the index set with the interleaving
    sign, transposing the Koszul differential."""
    _check_size(K)
    cells: dict[int, list] = {-1: [_AUG]}
    for sigma, omega in sigma_omega_generators(K):
        cells.setdefault(2 * len(sigma) + len(omega), []).append((sigma, omega))

    def boundary_of(cell, n):
        if n == 0:
            return [(_AUG, 1)]
        sigma, omega = cell
        terms = []
        for v in sigma:
            before = sum(1 for x in omega if x < v)
            sign = -1 if before % 2 else 1
            smaller = tuple(x for x in sigma if x != v)
            terms.append(((smaller, tuple(sorted(omega + (v,)))), sign))
        return terms

    return build_chain_data(cells, boundary_of)


def real_ma_homology(K: SimplicialComplex,
                     coefficients: Coefficients = INTEGERS) -> HomologyGroups:
    return homology_of_chain_data(real_model_chain_data(K), coefficients)


def complex_ma_homology(K: SimplicialComplex,
                        coefficients: Coefficients = INTEGERS) -> HomologyGroups:
    return homology_of_chain_data(complex_model_chain_data(K), coefficients)


def predicted_ma_homology(K: SimplicialComplex, coefficients: Coefficients,
                          pair: str) -> HomologyGroups:
    """Degree-n group as the direct sum over nonempty index subsets of the
    reduced homology of the induced subcomplex, shifted by 1 (``"real"``)
    or by the subset size plus 1 (``"complex"``)."""
    if pair not in ("real", "complex"):
        raise ValueError("pair must be 'real' or 'complex'")
    if K.is_void:
        raise ValueError("prediction needs a NonVoid complex")
    groups, shifts = [], []
    for size in range(1, K.m + 1):
        for subset in itertools.combinations(K.ambient, size):
            groups.append(reduced_homology(K.induced(subset), coefficients))
            shifts.append(1 if pair == "real" else size + 1)
    return direct_sum(groups, coefficients, shifts)


def _groups_match(a: HomologyGroups, b: HomologyGroups) -> dict[int, bool]:
    degrees = sorted(set(a.degrees()) | set(b.degrees()))
    return {d: a.rank(d) == b.rank(d) and a.torsion(d) == b.torsion(d)
            for d in degrees}


@dataclass(frozen=True)
class DecompositionReport:
    """Computed versus predicted homology of both models, degree by degree."""

    coefficients: Coefficients
    real_computed: HomologyGroups
    real_predicted: HomologyGroups
    complex_computed: HomologyGroups
    complex_predicted: HomologyGroups

    @property
    def real_verdicts(self) -> dict[int, bool]:
        return _groups_match(self.real_computed, self.real_predicted)

    @property
    def complex_verdicts(self) -> dict[int, bool]:
        return _groups_match(self.complex_computed, self.complex_predicted)

    @property
    def matches(self) -> bool:
        return (all(self.real_verdicts.values())
                and all(self.complex_verdicts.values()))


def verify_decomposition(K: SimplicialComplex,
                         coefficients: Coefficients = INTEGERS) -> DecompositionReport:
    """Exact per-degree comparison of both models against the summed
    induced-subcomplex prediction; this identity holds universally, so any
    mismatch indicates a bug."""
    return DecompositionReport(
        coefficients,
        real_ma_homology(K, coefficients),
        predicted_ma_homology(K, coefficients, "real"),
        complex_ma_homology(K, coefficients),
        predicted_ma_homology(K, coefficients, "complex"),
    )


@dataclass(frozen=True)
class WedgeOfSpheresReport:
    """Homological shadow of the wedge-of-spheres conclusion for complexes
    with sequentially Cohen-Macaulay duals over the integers."""

    computed: HomologyGroups
    predicted: HomologyGroups
    torsion_free: bool
    vanishes_through_degree_2: bool
    ranks_match: bool

    @property
    def passed(self) -> bool:
        return self.torsion_free and self.vanishes_through_degree_2 and self.ranks_match


def verify_wedge_of_spheres(K: SimplicialComplex) -> WedgeOfSpheresReport:
    """When the Alexander dual is sequentially Cohen-Macaulay over the
    integers the complex model must be torsion-free, vanish through degree
    2, and realize the summed induced-subcomplex ranks.

    Degrees 0 and 1 vanish for any wedge of spheres of dimension above 1;
    degree 2 is included because a summand in that degree could only come
    from a one-point induced subcomplex suspended once, which is acyclic,
    so it cannot occur either.
    """
    if not is_sequentially_cm(K.alexander_dual(), INTEGERS):
        raise NotApplicable("the Alexander dual is not sequentially "
                            "Cohen-Macaulay over the integers")
    computed = complex_ma_homology(K, INTEGERS)
    predicted = predicted_ma_homology(K, INTEGERS, "complex")
    low_ok = all(computed.rank(d) == 0 and not computed.torsion(d)
                 for d in (0, 1, 2))
    ranks = all(computed.rank(d) == predicted.rank(d)
                for d in sorted(set(computed.degrees()) | set(predicted.degrees())))
    return WedgeOfSpheresReport(computed, predicted, computed.torsion_free,
                                low_ok, ranks)
