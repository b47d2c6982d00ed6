"""Input parsing, the named-complex registry, and exhaustive corpus
enumeration.

Facet files are line oriented: comment lines start with '#', a header line
``m <integer>`` comes first, and each following line is either
``facet i1 i2 ...`` with strictly increasing indices in range, or one of
the literals ``empty`` (the empty complex) and ``void``.  Entries dominated
by another facet are rejected rather than absorbed.
"""

from __future__ import annotations

import itertools
from typing import Iterator

from .complexes import Face, SimplicialComplex, face_key
from .errors import (DominatedFacet, IndexOutOfRange, InternalError,
                     MalformedLine, MissingHeader, NonIncreasingFacet,
                     Unsupported)
from .homology import INTEGERS, reduced_homology

MAX_ENUMERATION = 4


# ----------------------------------------------------------------------
# facet files


def parse_facet_file(text: str) -> SimplicialComplex:
    m: int | None = None
    kind: str | None = None  # "facets" | "empty" | "void"
    facets: list[tuple[Face, int]] = []  # facet with its line number
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if m is None:
            if parts[0] != "m" or len(parts) != 2 or not parts[1].lstrip("-").isdigit():
                raise MissingHeader("expected header 'm <integer>'", lineno)
            m = int(parts[1])
            if m < 0:
                raise MalformedLine("ambient size must be >= 0", lineno)
            continue
        if parts == ["empty"] or parts == ["void"]:
            if kind is not None:
                raise MalformedLine("conflicting complex declarations", lineno)
            kind = parts[0]
            continue
        if parts[0] != "facet" or len(parts) < 2:
            raise MalformedLine(f"unrecognized line {line!r}", lineno)
        if kind in ("empty", "void"):
            raise MalformedLine("facet after an 'empty' or 'void' line", lineno)
        kind = "facets"
        try:
            idx = [int(p) for p in parts[1:]]
        except ValueError:
            raise MalformedLine("facet indices must be integers", lineno) from None
        if any(not 1 <= i <= m for i in idx):
            raise IndexOutOfRange(f"index outside 1..{m}", lineno)
        if any(a >= b for a, b in zip(idx, idx[1:])):
            raise NonIncreasingFacet("facet indices must be strictly increasing",
                                     lineno)
        new = tuple(idx)
        for old, old_line in facets:
            if set(new) <= set(old) or set(old) <= set(new):
                raise DominatedFacet(
                    f"facet {new} and facet {old} (line {old_line}) "
                    "are nested; only facets are accepted", lineno)
        facets.append((new, lineno))
    if m is None:
        raise MissingHeader("missing header 'm <integer>'",
                            len(text.splitlines()) + 1)
    if kind == "void":
        return SimplicialComplex.void_complex(m)
    if kind == "empty" or kind is None:
        return SimplicialComplex.empty_complex(m)
    return SimplicialComplex.from_facets(m, [f for f, _ in facets])


def format_facet_file(K: SimplicialComplex) -> str:
    """Inverse of the parser for complexes on a 1..m ambient set."""
    if K.ambient != tuple(range(1, K.m + 1)):
        raise ValueError("facet files only describe complexes on 1..m")
    lines = [f"m {K.m}"]
    if K.is_void:
        lines.append("void")
    elif K.is_empty_complex:
        lines.append("empty")
    else:
        for f in sorted(K.facets, key=face_key):
            lines.append("facet " + " ".join(map(str, f)))
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------
# named complexes

RP2_SIX_FACETS = ((1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
                  (2, 3, 5), (3, 5, 6), (3, 4, 6), (2, 4, 6), (2, 4, 5))


def _simplex(d: int) -> SimplicialComplex:
    if d < -1:
        raise ValueError("simplex dimension must be >= -1")
    return SimplicialComplex.full_simplex(d + 1)


def _boundary_simplex(d: int) -> SimplicialComplex:
    if d < 0:
        raise ValueError("boundary-simplex dimension must be >= 0")
    m = d + 1
    return SimplicialComplex.generated(
        m, itertools.combinations(range(1, m + 1), d))


def _cycle(n: int) -> SimplicialComplex:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    edges = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    return SimplicialComplex.from_facets(n, edges)


def _points(n: int) -> SimplicialComplex:
    if n < 1:
        raise ValueError("need at least one point")
    return SimplicialComplex.from_facets(n, [(i,) for i in range(1, n + 1)])


def _skeleton(d: int, m: int) -> SimplicialComplex:
    if not -1 <= d <= m - 1:
        raise ValueError("skeleton dimension out of range")
    return SimplicialComplex.generated(
        m, itertools.combinations(range(1, m + 1), d + 1))


def _rp2_six() -> SimplicialComplex:
    K = SimplicialComplex.from_facets(6, RP2_SIX_FACETS)
    h = reduced_homology(K, INTEGERS)
    # construction gate: the 6-vertex projective plane has exactly one
    # degree-1 group of order 2 and nothing else
    ok = (h.degrees() == (1,) and h.rank(1) == 0 and h.torsion(1) == (2,))
    if not ok:
        raise InternalError("rp2-6 facet list failed its homology self-check")
    return K


def _disjoint_edges(k: int) -> SimplicialComplex:
    if k < 1:
        raise ValueError("need at least one edge")
    return SimplicialComplex.from_facets(
        2 * k, [(2 * i - 1, 2 * i) for i in range(1, k + 1)])


NAMED_REGISTRY = {
    "simplex": (_simplex, 1),
    "boundary-simplex": (_boundary_simplex, 1),
    "cycle": (_cycle, 1),
    "points": (_points, 1),
    "skeleton": (_skeleton, 2),
    "rp2-6": (_rp2_six, 0),
    "disjoint-edges": (_disjoint_edges, 1),
}


def named_complex(name: str, *params: int) -> SimplicialComplex:
    entry = NAMED_REGISTRY.get(name)
    if entry is None:
        known = ", ".join(sorted(NAMED_REGISTRY))
        raise Unsupported(f"unknown complex name {name!r}; known: {known}")
    factory, arity = entry
    if len(params) != arity:
        raise Unsupported(f"{name} takes {arity} parameter(s), got {len(params)}")
    return factory(*params)


# ----------------------------------------------------------------------
# exhaustive corpus


def enumerate_complexes(n: int) -> Iterator[SimplicialComplex]:
    """All complexes on the labeled index set 1..n without ghost vertices,
    i.e. antichains of nonempty subsets covering every index, in a fixed
    deterministic order."""
    if not 1 <= n <= MAX_ENUMERATION:
        raise Unsupported(f"exhaustive enumeration is limited to 1 <= n <= "
                          f"{MAX_ENUMERATION}")
    subsets = sorted(
        (tuple(c) for r in range(1, n + 1)
         for c in itertools.combinations(range(1, n + 1), r)),
        key=face_key)
    full = set(range(1, n + 1))

    def extend(start: int, chosen: list[Face], covered: set[int]):
        if covered == full:
            yield SimplicialComplex.from_facets(n, chosen)
        for k in range(start, len(subsets)):
            cand = subsets[k]
            cs = set(cand)
            if any(cs <= set(f) or set(f) <= cs for f in chosen):
                continue
            chosen.append(cand)
            yield from extend(k + 1, chosen, covered | cs)
            chosen.pop()

    yield from extend(0, [], set())


def corpus_size(n: int) -> int:
    return sum(1 for _ in enumerate_complexes(n))
