"""Immutable simplicial complexes on explicit ambient index sets.

A complex is either Void (contains no face at all, not even the empty one)
or NonVoid, in which case it always contains the empty face.  The complex
whose only face is empty is written ``{}`` in reprs and called the empty
complex; it is distinct from Void.  Ambient index sets are kept explicit
because Alexander duality depends on them: the dual of a complex on
ambient ``S`` consists of the subsets of ``S`` whose complement in ``S``
is not a face.  Ghost vertices (ambient indices in no face) are allowed.

Faces are strictly increasing tuples of positive integers.  All faces of a
complex are enumerated in a fixed order, dimension ascending then
lexicographic, so that every matrix built downstream is reproducible.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import NotAFace

Face = tuple[int, ...]


def as_face(vertices: Iterable[int]) -> Face:
    """Canonicalize an iterable of vertex indices to a sorted tuple."""
    return tuple(sorted({int(v) for v in vertices}))


def face_key(f: Face) -> tuple[int, Face]:
    """Sort key realizing the fixed enumeration order."""
    return (len(f), f)


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex given by its ambient index set and facet antichain.

    ``facets`` never stores the empty face: the empty complex is the NonVoid
    value with an empty facet set.  ``maximal_faces`` reports the empty face
    as the single maximal face of the empty complex, which is the convention
    the spanning-facet machinery relies on.
    """

    ambient: Face
    facets: frozenset[Face]
    void: bool = False

    def __post_init__(self):
        amb = set(self.ambient)
        if list(self.ambient) != sorted(amb):
            raise ValueError("ambient index set must be strictly increasing")
        if self.void and self.facets:
            raise ValueError("a Void complex has no facets")
        for f in self.facets:
            if not f:
                raise ValueError("store the empty complex as an empty facet set")
            if list(f) != sorted(set(f)):
                raise ValueError(f"facet {f} is not strictly increasing")
            if not set(f) <= amb:
                raise ValueError(f"facet {f} leaves the ambient set {self.ambient}")
        for f, g in itertools.combinations(self.facets, 2):
            if set(f) <= set(g) or set(g) <= set(f):
                raise ValueError(f"facets {f} and {g} violate the antichain invariant")

    # ------------------------------------------------------------------
    # constructors

    @staticmethod
    def _ambient(spec) -> Face:
        if isinstance(spec, int):
            if spec < 0:
                raise ValueError("ambient size must be >= 0")
            return tuple(range(1, spec + 1))
        return as_face(spec)

    @classmethod
    def void_complex(cls, ambient) -> "SimplicialComplex":
        return cls(cls._ambient(ambient), frozenset(), void=True)

    @classmethod
    def empty_complex(cls, ambient) -> "SimplicialComplex":
        """The complex whose only face is the empty one."""
        return cls(cls._ambient(ambient), frozenset())

    @classmethod
    def from_facets(cls, ambient, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Build from an exact facet antichain; raises if it is not one."""
        fs = frozenset(as_face(f) for f in facets) - {()}
        return cls(cls._ambient(ambient), fs)

    @classmethod
    def generated(cls, ambient, faces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Build the complex generated by any face family, keeping maximal ones."""
        sets = {frozenset(as_face(f)) for f in faces}
        if not sets:
            return cls.void_complex(ambient)
        maximal = [s for s in sets if not any(s < t for t in sets)]
        return cls(cls._ambient(ambient), frozenset(tuple(sorted(s)) for s in maximal if s))

    @classmethod
    def full_simplex(cls, ambient) -> "SimplicialComplex":
        amb = cls._ambient(ambient)
        return cls(amb, frozenset([amb]) if amb else frozenset())

    # ------------------------------------------------------------------
    # basic queries

    @property
    def m(self) -> int:
        return len(self.ambient)

    @property
    def is_void(self) -> bool:
        return self.void

    @property
    def is_empty_complex(self) -> bool:
        return not self.void and not self.facets

    @property
    def dim(self) -> int | None:
        """Dimension, ``-1`` for the empty complex, ``None`` for Void."""
        if self.void:
            return None
        if not self.facets:
            return -1
        return max(len(f) for f in self.facets) - 1

    def maximal_faces(self) -> tuple[Face, ...]:
        if self.void:
            return ()
        if not self.facets:
            return ((),)
        return tuple(sorted(self.facets, key=face_key))

    @cached_property
    def _facet_sets(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(f) for f in self.facets)

    def __contains__(self, face) -> bool:
        if self.void:
            return False
        f = set(as_face(face))
        if not f:
            return True
        return any(f <= g for g in self._facet_sets)

    @cached_property
    def _all_faces(self) -> tuple[Face, ...]:
        if self.void:
            return ()
        seen: set[Face] = {()}
        for facet in self.facets:
            for r in range(1, len(facet) + 1):
                seen.update(itertools.combinations(facet, r))
        return tuple(sorted(seen, key=face_key))

    def faces(self) -> Iterator[Face]:
        """All faces, dimension ascending then lexicographic; includes the
        empty face for NonVoid complexes."""
        return iter(self._all_faces)

    def faces_of_dim(self, n: int) -> tuple[Face, ...]:
        return tuple(f for f in self._all_faces if len(f) == n + 1)

    def face_count(self) -> int:
        return len(self._all_faces)

    @property
    def support(self) -> Face:
        """Ambient indices that actually occur in a face."""
        used: set[int] = set()
        for f in self.facets:
            used.update(f)
        return tuple(sorted(used))

    @property
    def ghost_vertices(self) -> Face:
        return tuple(sorted(set(self.ambient) - set(self.support)))

    @property
    def is_simplex(self) -> bool:
        """True when the complex is the closure of at most one face.

        The empty complex counts as a simplex (the closure of the empty face);
        Void does not.
        """
        return not self.void and len(self.facets) <= 1

    # ------------------------------------------------------------------
    # constructions

    def link(self, sigma) -> "SimplicialComplex":
        """Faces disjoint from ``sigma`` whose union with it is a face.

        The ambient index set of the result is the current one minus
        ``sigma``, with indices kept verbatim.  See :meth:`star` for the
        variant keeping ``sigma`` itself.
        """
        s = as_face(sigma)
        if s not in self:
            raise NotAFace(f"{s} is not a face")
        sset = set(s)
        new_ambient = tuple(v for v in self.ambient if v not in sset)
        gens = [tuple(v for v in f if v not in sset)
                for f in self.maximal_faces() if sset <= set(f)]
        return SimplicialComplex.generated(new_ambient, gens)

    def star(self, sigma) -> "SimplicialComplex":
        """Faces whose union with ``sigma`` is a face; ambient unchanged."""
        s = as_face(sigma)
        if s not in self:
            raise NotAFace(f"{s} is not a face")
        sset = set(s)
        gens = [f for f in self.maximal_faces() if sset <= set(f)]
        return SimplicialComplex.generated(self.ambient, gens)

    def deletion(self, sigma, drop_vertex: bool = True) -> "SimplicialComplex":
        """Faces not containing ``sigma``.

        For a single vertex the ambient index set shrinks by default
        (``drop_vertex=True``); pass ``False`` to keep the full ambient set.
        For larger ``sigma`` the ambient set is always kept.  Deleting from
        Void yields Void.
        """
        s = as_face(sigma)
        sset = set(s)
        if len(s) == 1 and drop_vertex:
            new_ambient = tuple(v for v in self.ambient if v not in sset)
        else:
            new_ambient = self.ambient
        if self.void:
            return SimplicialComplex.void_complex(new_ambient)
        gens: list[Face] = []
        for f in self.maximal_faces():
            if sset <= set(f):
                gens.extend(tuple(v for v in f if v != x) for x in s)
            else:
                gens.append(f)
        return SimplicialComplex.generated(new_ambient, gens)

    def induced(self, subset) -> "SimplicialComplex":
        """The faces contained in ``subset``, on ambient set ``subset``."""
        sub = as_face(subset)
        if not set(sub) <= set(self.ambient):
            raise ValueError(f"{sub} is not a subset of the ambient set")
        if self.void:
            return SimplicialComplex.void_complex(sub)
        subset_set = set(sub)
        gens = [tuple(v for v in f if v in subset_set) for f in self.maximal_faces()]
        return SimplicialComplex.generated(sub, gens)

    def skeleton_ge(self, i: int) -> "SimplicialComplex":
        """Subcomplex generated by facets of dimension at least ``i``."""
        if self.void:
            return self
        keep = [f for f in self.maximal_faces() if len(f) - 1 >= i]
        if not keep:
            return SimplicialComplex.void_complex(self.ambient)
        return SimplicialComplex.generated(self.ambient, keep)

    def minimal_nonfaces(self) -> tuple[Face, ...]:
        """Inclusion-minimal subsets of the ambient set that are not faces.

        For Void the empty set is the unique minimal nonface, which keeps
        Alexander duality an involution across the Void/empty split.
        """
        out: list[Face] = []
        for size in range(0, self.m + 1):
            for cand in itertools.combinations(self.ambient, size):
                if cand in self:
                    continue
                if all(cand[:k] + cand[k + 1:] in self for k in range(size)):
                    out.append(cand)
        return tuple(sorted(out, key=face_key))

    def alexander_dual(self) -> "SimplicialComplex":
        """Subsets of the ambient set whose ambient complement is not a face."""
        if self.ambient in self:
            return SimplicialComplex.void_complex(self.ambient)
        amb = set(self.ambient)
        gens = [tuple(sorted(amb - set(n))) for n in self.minimal_nonfaces()]
        return SimplicialComplex.generated(self.ambient, gens)

    def suspension(self, apexes: tuple[int, int] | None = None) -> "SimplicialComplex":
        """Unreduced suspension: two new apex indices, each coned over the
        complex.  Apexes default to the two integers above the ambient max."""
        if self.void:
            raise ValueError("cannot suspend the Void complex")
        if apexes is None:
            base = max(self.ambient) if self.ambient else 0
            apexes = (base + 1, base + 2)
        a, b = apexes
        if a == b or a in self.ambient or b in self.ambient:
            raise ValueError(f"apexes {apexes} collide with the ambient set")
        new_ambient = as_face(self.ambient + (a, b))
        gens = []
        for f in self.maximal_faces():
            gens.append(as_face(f + (a,)))
            gens.append(as_face(f + (b,)))
        return SimplicialComplex.generated(new_ambient, gens)

    # ------------------------------------------------------------------
    # identity

    def canonical_text(self) -> str:
        kind = "void" if self.void else ("empty" if not self.facets else "complex")
        facets = ";".join(",".join(map(str, f)) for f in sorted(self.facets, key=face_key))
        return f"ambient={','.join(map(str, self.ambient))}|kind={kind}|facets={facets}"

    def canonical_hash(self) -> str:
        return hashlib.sha256(self.canonical_text().encode()).hexdigest()

    def __repr__(self) -> str:
        if self.void:
            return f"SimplicialComplex.void({self.ambient})"
        return f"SimplicialComplex({self.ambient}, {sorted(self.facets, key=face_key)})"
