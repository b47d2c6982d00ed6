"""Spanning facets: from shellings over the integers and from homology
bases over prime fields, with verifiable certificates.

A certificate names a set of facets whose open removal leaves an acyclic
remainder while every removed facet keeps its whole boundary behind.  The
empty complex carries the one degenerate certificate, with the empty face
as its single facet and the degree -1 fundamental cycle as witness; this
keeps the dual sphere-list prediction uniform when a dual degenerates to
the empty complex.

Acyclicity of remainders is always re-verified rather than trusted from
theory, so producing a certificate doubles as a check of the underlying
combinatorics.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .complexes import Face, SimplicialComplex, face_key
from .errors import (AmbientMismatch, InternalError, NotACycle,
                     NotApplicable, NotAShelling)
from .homology import (Chain, Coefficients, GF, INTEGERS, chain_is_cycle,
                       homology_basis, is_acyclic, reduced_homology)
from .structure import ShellingOrder, verify_shelling


@dataclass(frozen=True)
class SphereList:
    """Multiset of sphere dimensions, stored sorted."""

    dims: tuple[int, ...]

    @classmethod
    def of(cls, dims: Iterable[int]) -> "SphereList":
        return cls(tuple(sorted(dims)))

    def multiplicity(self, d: int) -> int:
        return self.dims.count(d)

    def as_counter(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for d in self.dims:
            out[d] = out.get(d, 0) + 1
        return out

    def __len__(self) -> int:
        return len(self.dims)


@dataclass(frozen=True)
class SpanningFacetCertificate:
    """Facets gamma of the host, their witness cycles, and the coefficient
    system over which the remainder is claimed acyclic."""

    host: SimplicialComplex
    gamma: tuple[Face, ...]
    coefficients: Coefficients
    witnesses: tuple[tuple[Face, Chain], ...] | None = None

    def remainder(self) -> SimplicialComplex:
        """Host minus the open facets of gamma.  Well defined only when
        every member of gamma is a maximal face, which verification checks
        before relying on this."""
        if not self.gamma:
            return self.host
        remaining = set(self.host.faces()) - set(self.gamma)
        if not remaining:
            return SimplicialComplex.void_complex(self.host.ambient)
        return SimplicialComplex.generated(self.host.ambient, remaining)

    def witness_for(self, f: Face) -> Chain | None:
        if self.witnesses is None:
            return None
        return dict(self.witnesses).get(f)


def verify_certificate(cert: SpanningFacetCertificate) -> bool:
    """Re-check everything from scratch: gamma consists of facets, the
    remainder is acyclic over the stated coefficients, each removed facet
    keeps its boundary in the remainder, and each witness is a cycle
    hitting its facet and no other member of gamma."""
    host = cert.host
    maximal = set(host.maximal_faces())
    gamma = set(cert.gamma)
    if len(cert.gamma) != len(gamma) or not gamma <= maximal:
        return False
    remainder = cert.remainder()
    if not is_acyclic(remainder, cert.coefficients):
        return False
    for f in gamma:
        for k in range(len(f)):
            if f[:k] + f[k + 1:] not in remainder:
                return False
    if cert.witnesses is not None:
        by_facet = dict(cert.witnesses)
        if set(by_facet) != gamma:
            return False
        p = cert.coefficients.p if cert.coefficients.kind == "F" else 0
        for f, chain in by_facet.items():
            if chain.degree != len(f) - 1:
                return False
            if not chain_is_cycle(host, chain, cert.coefficients):
                return False
            c = chain.coefficient(f)
            if (c % p if p else c) == 0:
                return False
            for g in gamma:
                if g != f and len(g) == len(f):
                    cg = chain.coefficient(g)
                    if (cg % p if p else cg) != 0:
                        return False
    return True


# ----------------------------------------------------------------------
# from a shelling


def spanning_from_shelling(K: SimplicialComplex,
                           order: ShellingOrder) -> SpanningFacetCertificate:
    """Facets, after the first, whose whole boundary already lies in the
    union of the earlier ones.  The remainder is acyclic over the integers;
    this is re-checked, not assumed."""
    if not verify_shelling(K, order):
        raise NotAShelling("the given order is not a shelling")
    if K.is_empty_complex:
        witness = Chain.from_dict(-1, {(): 1})
        cert = SpanningFacetCertificate(K, ((),), INTEGERS, (((), witness),))
    else:
        gamma: list[Face] = []
        earlier: list[set[int]] = []
        for k, f in enumerate(order):
            if k and all(any(set(f) - {x} <= g for g in earlier) for x in f):
                gamma.append(f)
            earlier.append(set(f))
        cert = SpanningFacetCertificate(K, tuple(sorted(gamma, key=face_key)),
                                        INTEGERS, None)
    if not verify_certificate(cert):
        raise InternalError("shelling remainder failed the acyclicity recheck")
    return cert


# ----------------------------------------------------------------------
# from a homology basis mod p


def _hypothesis_failure(K: SimplicialComplex, p: int) -> None:
    """Raise NotApplicable if some degree-i cycle space of the complex
    generated by facets of dimension > i carries homology mod p."""
    top = K.dim
    if top is None:
        return
    for i in range(0, top + 1):
        skel = K.skeleton_ge(i + 1)
        if skel.is_void:
            continue
        h = reduced_homology(skel, GF(p))
        if h.dimension(i):
            witness = homology_basis(skel, i, p)[0]
            raise NotApplicable(
                f"degree-{i} homology of the dimension->{i} part is nonzero mod {p}",
                degree=i, witness=witness)


def spanning_mod_p(K: SimplicialComplex, p: int) -> SpanningFacetCertificate:
    """Spanning facets over F_p extracted from homology bases.

    Per degree i, each basis cycle is assigned a dimension-i facet it
    involves (lexicographically smallest), and that facet's coefficient is
    eliminated from every other cycle, so each witness ends up involving
    exactly one chosen facet.  Certificate conditions are re-verified
    before returning.
    """
    if K.is_void:
        raise ValueError("spanning facets need a NonVoid complex")
    _hypothesis_failure(K, p)
    coeff = GF(p)
    facets_by_dim: dict[int, set[Face]] = {}
    for f in K.maximal_faces():
        facets_by_dim.setdefault(len(f) - 1, set()).add(f)
    top = K.dim
    gamma: list[Face] = []
    witnesses: list[tuple[Face, Chain]] = []
    for i in range(-1, (top if top is not None else -1) + 1):
        basis = homology_basis(K, i, p)
        if not basis:
            continue
        rows = [ch.as_dict() for ch in basis]
        dim_facets = facets_by_dim.get(i, set())
        chosen: list[Face] = []
        for j, row in enumerate(rows):
            candidates = sorted(f for f, c in row.items()
                                if c % p and f in dim_facets)
            if not candidates:
                raise NotApplicable(
                    f"a degree-{i} homology basis cycle involves no facet",
                    degree=i, witness=Chain.from_dict(i, row))
            pivot = candidates[0]
            chosen.append(pivot)
            inv = pow(row[pivot] % p, p - 2, p)
            for k, other in enumerate(rows):
                if k != j and other.get(pivot, 0) % p:
                    c = other[pivot] * inv % p
                    for face, val in row.items():
                        other[face] = (other.get(face, 0) - c * val) % p
        for f, row in zip(chosen, rows):
            gamma.append(f)
            witnesses.append((f, Chain.from_dict(i, {g: c % p for g, c in row.items()})))
    cert = SpanningFacetCertificate(
        K, tuple(sorted(gamma, key=face_key)), coeff,
        tuple(sorted(witnesses, key=lambda t: face_key(t[0]))))
    if not verify_certificate(cert):
        raise InternalError("mod-p spanning facets failed certificate recheck")
    return cert


# ----------------------------------------------------------------------
# chain restriction at a vertex


def chain_vertex_part(K: SimplicialComplex, x: Chain, v: int,
                      p: int) -> tuple[Chain, Chain]:
    """Split off the terms of a cycle containing a vertex.

    Returns (x_v, boundary of x_v), the latter re-read as a chain of the
    link of the vertex and verified to be a cycle there.  For a cycle the
    boundary of the vertex part never involves the vertex itself.
    """
    coeff = GF(p)
    if not chain_is_cycle(K, x, coeff):
        raise NotACycle("the chain is not a cycle of the complex mod p")
    xv = x.restrict_to_vertex(v).reduce_mod(p)
    bd = xv.boundary().reduce_mod(p)
    if any(v in f for f, _ in bd.terms):
        raise InternalError("vertex part of a cycle has a vertex-bearing boundary")
    if not xv.is_zero:
        link = K.link((v,))
        if any(f not in link for f, _ in bd.terms):
            raise InternalError("boundary of the vertex part leaves the link")
        if not chain_is_cycle(link, bd, coeff):
            raise InternalError("boundary of the vertex part is not a link cycle")
    return xv, bd


# ----------------------------------------------------------------------
# dual sphere-list prediction


def dual_wedge_prediction(K: SimplicialComplex,
                          cert: SpanningFacetCertificate) -> SphereList:
    """Sphere dimensions m - |F| - 1 for the facets in a certificate of the
    Alexander dual; the multiplicity in degree d predicts the rank of the
    suspension's homology there (mod-p dimension for mod-p certificates)."""
    if cert.host != K.alexander_dual():
        raise AmbientMismatch("certificate host is not the Alexander dual")
    return SphereList.of(K.m - len(f) - 1 for f in cert.gamma)
