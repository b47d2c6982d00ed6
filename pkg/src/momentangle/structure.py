"""Decision procedures for combinatorial structure of simplicial complexes.

Shellability here is the non-pure notion: each facet added after the first
must meet the union of the earlier ones in a nonvoid pure complex of
codimension one inside it.  Vertex decomposability and shiftedness follow
the matching non-pure conventions.  Collapsibility is searched greedily
with limited backtracking, so only a Yes verdict is conclusive.

The extractibility test is a homological shadow: it certifies either that
some vertex deletion is a simplex, or that all deletions certify and the
inclusion-induced maps of suspended deletions are jointly surjective on the
homology of the suspended complex.  It does not decide the existence of any
splitting map, only this necessary condition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .complexes import Face, SimplicialComplex, as_face, face_key
from .errors import GhostVertex, InvalidOrder
from .homology import (Coefficients, SpanTracker, cycle_basis,
                       field_ops, matrix_rank_field, reduced_homology,
                       simplicial_chain_data)

ShellingOrder = tuple[Face, ...]

DEFAULT_SHELLING_BUDGET = 10 ** 6
DEFAULT_COLLAPSE_BUDGET = 10 ** 5


@dataclass(frozen=True)
class StructureVerdict:
    """Outcome of a structure test: yes with witness, no, or unknown.

    Unknown means a search budget was exhausted and proves nothing; this
    matters for collapsibility, where the greedy search is incomplete.
    """

    prop: str
    answer: str  # "yes" | "no" | "unknown"
    witness: object = None
    reason: str | None = None
    nodes: int | None = None

    @property
    def yes(self) -> bool:
        return self.answer == "yes"

    @property
    def no(self) -> bool:
        return self.answer == "no"

    @property
    def unknown(self) -> bool:
        return self.answer == "unknown"


# ----------------------------------------------------------------------
# shellability


def _step_ok(new_facet: Face, earlier: list[frozenset]) -> bool:
    """The faces of ``new_facet`` lying in earlier facets must form a
    nonvoid pure complex of dimension one less than the new facet."""
    fs = frozenset(new_facet)
    inters = {fs & g for g in earlier}
    maximal = [s for s in inters if not any(s < t for t in inters)]
    want = len(new_facet) - 1
    return all(len(s) == want for s in maximal)


def verify_shelling(K: SimplicialComplex, order: Iterable[Iterable[int]]) -> bool:
    ord_faces = tuple(as_face(f) for f in order)
    expected = K.maximal_faces()
    if sorted(ord_faces, key=face_key) != sorted(expected, key=face_key):
        raise InvalidOrder("order is not a permutation of the facets")
    earlier: list[frozenset] = []
    for k, F in enumerate(ord_faces):
        if k and not _step_ok(F, earlier):
            return False
        earlier.append(frozenset(F))
    return True


def find_shelling(K: SimplicialComplex,
                  budget: int = DEFAULT_SHELLING_BUDGET) -> StructureVerdict:
    """Backtracking search for a shelling order.

    Whether a facet can extend a prefix depends only on the set of facets
    already placed, so dead prefixes are memoized as sets; the search is
    over subsets rather than permutations.
    """
    if K.is_void:
        raise ValueError("the Void complex has no facets to shell")
    facets = K.maximal_faces()
    if len(facets) <= 1:
        return StructureVerdict("shellable", "yes", witness=facets)
    dead: set[frozenset] = set()
    nodes = 0

    def search(order: list[Face], used: set[Face], earlier: list[frozenset]):
        nonlocal nodes
        if len(order) == len(facets):
            return tuple(order)
        state = frozenset(used)
        if state in dead:
            return None
        for F in facets:
            if F in used:
                continue
            nodes += 1
            if nodes > budget:
                return "budget"
            if not order or _step_ok(F, earlier):
                order.append(F)
                used.add(F)
                earlier.append(frozenset(F))
                result = search(order, used, earlier)
                if result is not None:
                    return result
                order.pop()
                used.remove(F)
                earlier.pop()
        dead.add(state)
        return None

    result = search([], set(), [])
    if result == "budget":
        return StructureVerdict("shellable", "unknown",
                                reason="node budget exhausted", nodes=nodes)
    if result is None:
        return StructureVerdict("shellable", "no",
                                reason="backtracking search exhausted", nodes=nodes)
    return StructureVerdict("shellable", "yes", witness=result, nodes=nodes)


# ----------------------------------------------------------------------
# sequential Cohen-Macaulayness


def is_sequentially_cm(K: SimplicialComplex, coefficients: Coefficients) -> bool:
    """Every link, restricted to its facets of dimension >= i, has no
    reduced homology below degree i.  Void inputs pass vacuously."""
    if K.is_void:
        return True
    for sigma in K.faces():
        link = K.link(sigma)
        top = link.dim
        if top is None:
            continue
        for i in range(0, top + 1):
            skel = link.skeleton_ge(i)
            if skel.is_void:
                continue
            h = reduced_homology(skel, coefficients)
            for k in range(-1, i):
                if h.rank(k) or h.torsion(k):
                    return False
    return True


# ----------------------------------------------------------------------
# vertex decomposability

_vd_cache: dict[SimplicialComplex, tuple[bool, object]] = {}


def _vd(K: SimplicialComplex) -> tuple[bool, object]:
    if K.is_simplex:
        return True, ("simplex",)
    cached = _vd_cache.get(K)
    if cached is not None:
        return cached
    result: tuple[bool, object] = (False, None)
    kf = set(K.facets)
    for v in K.support:
        dl = K.deletion((v,))
        if not set(dl.facets) <= kf:
            continue  # v is not a shedding vertex
        ok_d, wit_d = _vd(dl)
        if not ok_d:
            continue
        ok_l, wit_l = _vd(K.link((v,)))
        if ok_l:
            result = (True, ("shed", v, wit_d, wit_l))
            break
    _vd_cache[K] = result
    return result


def is_vertex_decomposable(K: SimplicialComplex) -> StructureVerdict:
    """Recursive test: a simplex, or some shedding vertex whose deletion and
    link are both vertex-decomposable, where shedding means every facet of
    the deletion is a facet of the complex."""
    if K.is_void:
        raise ValueError("vertex decomposability needs a NonVoid complex")
    ok, witness = _vd(K)
    if ok:
        return StructureVerdict("vertex-decomposable", "yes", witness=witness)
    return StructureVerdict("vertex-decomposable", "no",
                            reason="no shedding vertex survives recursion")


# ----------------------------------------------------------------------
# shiftedness

MAX_SHIFTED_SEARCH = 8


def _shifted_under(K: SimplicialComplex, order: tuple[int, ...]) -> Face | None:
    """None when shifted for this vertex order, else an offending face."""
    position = {v: i for i, v in enumerate(order)}
    for f in K.faces():
        fs = set(f)
        for j in f:
            for i in order[:position[j]]:
                if i not in fs:
                    swapped = tuple(sorted(fs - {j} | {i}))
                    if swapped not in K:
                        return f
    return None


def is_shifted(K: SimplicialComplex,
               order: Iterable[int] | None = None) -> StructureVerdict:
    """With an order: faces stay faces when a member is swapped for an
    earlier non-member.  Without one: search all vertex orders (ambient
    size at most 8, Unknown beyond)."""
    if K.is_void:
        raise ValueError("shiftedness needs a NonVoid complex")
    if order is not None:
        ord_t = tuple(order)
        if sorted(ord_t) != list(K.ambient):
            raise InvalidOrder("order must be a permutation of the ambient set")
        bad = _shifted_under(K, ord_t)
        if bad is None:
            return StructureVerdict("shifted", "yes", witness=ord_t)
        return StructureVerdict("shifted", "no",
                                reason=f"face {bad} breaks the swap closure")
    if K.m > MAX_SHIFTED_SEARCH:
        return StructureVerdict("shifted", "unknown",
                                reason=f"order search capped at m <= {MAX_SHIFTED_SEARCH}")
    for perm in itertools.permutations(K.ambient):
        if _shifted_under(K, perm) is None:
            return StructureVerdict("shifted", "yes", witness=perm)
    return StructureVerdict("shifted", "no",
                            reason="all vertex orders exhausted")


# ----------------------------------------------------------------------
# collapsibility (greedy, incomplete)


def _free_pairs(faces: set[Face]) -> list[tuple[Face, Face]]:
    pairs = []
    for sigma in faces:
        if not sigma:
            continue
        cofaces = [t for t in faces if len(t) > len(sigma) and set(sigma) < set(t)]
        if len(cofaces) == 1:
            pairs.append((sigma, cofaces[0]))
    pairs.sort(key=lambda p: face_key(p[0]))
    return pairs


def _is_point(faces: set[Face]) -> bool:
    return len(faces) == 2 and () in faces and any(len(f) == 1 for f in faces)


def greedy_collapse(K: SimplicialComplex,
                    budget: int = DEFAULT_COLLAPSE_BUDGET) -> StructureVerdict:
    """Search for a collapse to a point through free-face pairs.

    Greedy with limited backtracking; a verdict other than Yes proves
    nothing about collapsibility.
    """
    if K.is_void:
        raise ValueError("collapse needs a NonVoid complex")
    start = set(K.faces())
    if _is_point(start):
        return StructureVerdict("collapsible", "yes", witness=())
    nodes = 0

    def search(faces: set[Face], seq: list[tuple[Face, Face]]):
        nonlocal nodes
        if _is_point(faces):
            return tuple(seq)
        nodes += 1
        if nodes > budget:
            return "budget"
        for sigma, tau in _free_pairs(faces):
            faces.difference_update((sigma, tau))
            seq.append((sigma, tau))
            result = search(faces, seq)
            if isinstance(result, tuple) or result == "budget":
                return result
            seq.pop()
            faces.update((sigma, tau))
        return None

    result = search(start, [])
    if isinstance(result, tuple):
        return StructureVerdict("collapsible", "yes", witness=result, nodes=nodes)
    reason = ("node budget exhausted" if result == "budget"
              else "greedy search found no collapse; inconclusive")
    return StructureVerdict("collapsible", "unknown", reason=reason, nodes=nodes)


def replay_collapse(K: SimplicialComplex,
                    sequence: Iterable[tuple[Iterable[int], Iterable[int]]]) -> bool:
    """Re-verify a collapse witness step by step."""
    faces = set(K.faces())
    for sigma, tau in sequence:
        s, t = as_face(sigma), as_face(tau)
        if s not in faces or t not in faces:
            return False
        if len(t) != len(s) + 1 or not set(s) < set(t):
            return False
        cofaces = [u for u in faces if len(u) > len(s) and set(s) < set(u)]
        if cofaces != [t]:
            return False
        faces.difference_update((s, t))
    return _is_point(faces)


# ----------------------------------------------------------------------
# extractibility, homological shadow

_ext_cache: dict[tuple[SimplicialComplex, Coefficients], StructureVerdict] = {}


def _suspension_surjective(K: SimplicialComplex,
                           coefficients: Coefficients) -> tuple[bool, int | None]:
    """Do the suspended vertex deletions jointly surject onto the homology
    of the suspended complex?  Returns (ok, failing degree)."""
    base = max(K.ambient) if K.ambient else 0
    apexes = (base + 1, base + 2)
    big = simplicial_chain_data(K.suspension(apexes))
    ops = field_ops(coefficients)
    sub_data = []
    for v in K.ambient:
        dl = K.deletion((v,))
        sub_data.append(simplicial_chain_data(dl.suspension(apexes)))
    for n in big.degrees():
        width = big.cell_count(n)
        rank_n = matrix_rank_field(big.boundary[n], ops) if big.boundary.get(n) else 0
        rank_up = (matrix_rank_field(big.boundary[n + 1], ops)
                   if big.boundary.get(n + 1) else 0)
        cycles_dim = width - rank_n
        if cycles_dim - rank_up == 0:
            continue
        tracker = SpanTracker(ops, width)
        upper = big.boundary.get(n + 1)
        if upper:
            for col in zip(*upper):
                tracker.add(list(col))
        big_index = big.index[n]
        for data in sub_data:
            cells = data.cells.get(n)
            if not cells:
                continue
            for vec in cycle_basis(data, n, coefficients):
                mapped = [0] * width
                for i, x in enumerate(vec):
                    if not ops.is_zero(x):
                        mapped[big_index[cells[i]]] = x
                tracker.add(mapped)
            if tracker.rank == cycles_dim:
                break
        if tracker.rank < cycles_dim:
            return False, n
    return True, None


def extractibility_certificate(K: SimplicialComplex,
                               coefficients: Coefficients) -> StructureVerdict:
    """Homological shadow of the recursive vertex-deletion splitting test.

    Yes when some vertex deletion is a simplex, or when every deletion
    certifies Yes and the inclusion-induced maps from the suspended
    deletions jointly surject onto the homology of the suspension, in every
    degree, over the given field.  The existence of an actual splitting map
    is not decided.
    """
    if not coefficients.is_field:
        raise ValueError("the extractibility shadow is tested over a field")
    if K.is_void:
        raise ValueError("extractibility needs a NonVoid complex")
    if K.ghost_vertices:
        raise GhostVertex(f"ghost vertices {K.ghost_vertices} present")
    key = (K, coefficients)
    cached = _ext_cache.get(key)
    if cached is not None:
        return cached

    prop = "extractible-shadow"
    if K.is_simplex:
        verdict = StructureVerdict(prop, "yes", witness=("simplex",))
    else:
        verdict = None
        for v in K.ambient:
            if K.deletion((v,)).is_simplex:
                verdict = StructureVerdict(prop, "yes",
                                           witness=("deletion-simplex", v))
                break
        if verdict is None:
            children = {}
            for v in K.ambient:
                sub = extractibility_certificate(K.deletion((v,)), coefficients)
                if not sub.yes:
                    verdict = StructureVerdict(
                        prop, "no",
                        reason=f"deletion of {v} does not certify")
                    break
                children[v] = sub.witness
            if verdict is None:
                ok, degree = _suspension_surjective(K, coefficients)
                if ok:
                    verdict = StructureVerdict(
                        prop, "yes",
                        witness=("joint-surjection", tuple(sorted(children.items()))))
                else:
                    verdict = StructureVerdict(
                        prop, "no",
                        reason=f"suspended deletions miss homology in degree {degree}")
    _ext_cache[key] = verdict
    return verdict
