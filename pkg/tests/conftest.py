"""Shared fixtures and independent brute-force oracles.

The oracles work straight from definitions by enumerating subsets of the
ambient index set, never through the operations they are used to check.
"""

from __future__ import annotations

import itertools
from math import gcd

import pytest

from momentangle import SimplicialComplex, named_complex
from momentangle.catalog import enumerate_complexes


# ----------------------------------------------------------------------
# brute-force face-set oracles


def oracle_faces(K: SimplicialComplex) -> set[tuple[int, ...]]:
    """All faces by subset enumeration over the ambient set."""
    if K.is_void:
        return set()
    out = set()
    for r in range(K.m + 1):
        for cand in itertools.combinations(K.ambient, r):
            if any(set(cand) <= set(f) for f in K.facets) or cand == ():
                out.add(cand)
    return out


def oracle_link(K: SimplicialComplex, sigma) -> set[tuple[int, ...]]:
    s = set(sigma)
    faces = oracle_faces(K)
    return {t for t in faces
            if not s & set(t) and tuple(sorted(s | set(t))) in faces}


def oracle_deletion(K: SimplicialComplex, sigma) -> set[tuple[int, ...]]:
    s = set(sigma)
    return {t for t in oracle_faces(K) if not s <= set(t)}


def oracle_induced(K: SimplicialComplex, subset) -> set[tuple[int, ...]]:
    s = set(subset)
    return {t for t in oracle_faces(K) if set(t) <= s}


def oracle_dual_faces(K: SimplicialComplex) -> set[tuple[int, ...]]:
    amb = set(K.ambient)
    faces = oracle_faces(K)
    out = set()
    for r in range(K.m + 1):
        for cand in itertools.combinations(K.ambient, r):
            if tuple(sorted(amb - set(cand))) not in faces:
                out.add(cand)
    return out


def oracle_minimal_nonfaces(K: SimplicialComplex) -> set[tuple[int, ...]]:
    faces = oracle_faces(K)
    nonfaces = set()
    for r in range(K.m + 1):
        for cand in itertools.combinations(K.ambient, r):
            if cand not in faces:
                nonfaces.add(cand)
    return {n for n in nonfaces
            if all(n[:k] + n[k + 1:] not in nonfaces for k in range(len(n)))}


def faces_of(K: SimplicialComplex) -> set[tuple[int, ...]]:
    return set(K.faces())


# ----------------------------------------------------------------------
# Smith normal form oracle: determinantal divisors


def _det(mat) -> int:
    n = len(mat)
    if n == 0:
        return 1
    if n == 1:
        return mat[0][0]
    total = 0
    for j in range(n):
        if mat[0][j]:
            minor = [row[:j] + row[j + 1:] for row in mat[1:]]
            total += (-1) ** j * mat[0][j] * _det(minor)
    return total


def oracle_invariant_factors(mat) -> list[int]:
    """Invariant factors as quotients of gcds of k-by-k minors."""
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    divisors = [1]
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for ri in itertools.combinations(range(rows), k):
            for ci in itertools.combinations(range(cols), k):
                sub = [[mat[i][j] for j in ci] for i in ri]
                g = gcd(g, _det(sub))
        if g == 0:
            break
        divisors.append(g)
    return [divisors[k] // divisors[k - 1] for k in range(1, len(divisors))]


# ----------------------------------------------------------------------
# small standard complexes


@pytest.fixture(scope="session")
def triangle_boundary():
    return named_complex("boundary-simplex", 2)


@pytest.fixture(scope="session")
def full_triangle():
    return named_complex("simplex", 2)


@pytest.fixture(scope="session")
def four_cycle():
    return named_complex("cycle", 4)


@pytest.fixture(scope="session")
def four_points():
    return named_complex("points", 4)


@pytest.fixture(scope="session")
def rp2():
    return named_complex("rp2-6")


@pytest.fixture(scope="session")
def two_disjoint_edges():
    return named_complex("disjoint-edges", 2)


@pytest.fixture(scope="session")
def corpus_n3():
    """Every complex without ghost vertices on up to 3 indices."""
    out = []
    for n in (1, 2, 3):
        out.extend(enumerate_complexes(n))
    return out


@pytest.fixture(scope="session")
def corpus_full():
    """The full exhaustive corpus through 4 indices."""
    out = []
    for n in (1, 2, 3, 4):
        out.extend(enumerate_complexes(n))
    return out
