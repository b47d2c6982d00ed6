"""Facet-file grammar, the named registry, and corpus enumeration."""

import itertools

import pytest

from momentangle import (SimplicialComplex, format_facet_file, named_complex,
                         parse_facet_file)
from momentangle.catalog import corpus_size, enumerate_complexes
from momentangle.errors import (DominatedFacet, IndexOutOfRange,
                                MalformedLine, MissingHeader,
                                NonIncreasingFacet, Unsupported)


class TestParse:
    def test_triangle_boundary(self):
        K = parse_facet_file("m 3\nfacet 1 2\nfacet 1 3\nfacet 2 3\n")
        assert K == named_complex("boundary-simplex", 2)

    def test_empty_with_ghosts(self):
        K = parse_facet_file("m 2\nempty\n")
        assert K.is_empty_complex and K.m == 2

    def test_void(self):
        assert parse_facet_file("m 1\nvoid\n").is_void

    def test_comments_and_blanks(self):
        K = parse_facet_file("# a comment\n\nm 2\n# another\nfacet 1 2\n")
        assert K.facets == frozenset({(1, 2)})

    def test_dominated_facet_line_number(self):
        with pytest.raises(DominatedFacet) as exc:
            parse_facet_file("m 3\nfacet 1 2\nfacet 1\n")
        assert exc.value.line == 3

    def test_dominated_in_other_direction(self):
        with pytest.raises(DominatedFacet):
            parse_facet_file("m 3\nfacet 1\nfacet 1 2\n")

    def test_index_out_of_range(self):
        with pytest.raises(IndexOutOfRange) as exc:
            parse_facet_file("m 2\nfacet 1 3\n")
        assert exc.value.line == 2

    def test_non_increasing(self):
        with pytest.raises(NonIncreasingFacet):
            parse_facet_file("m 3\nfacet 2 1\n")
        with pytest.raises(NonIncreasingFacet):
            parse_facet_file("m 3\nfacet 1 1\n")

    def test_missing_header(self):
        with pytest.raises(MissingHeader):
            parse_facet_file("facet 1 2\n")
        with pytest.raises(MissingHeader):
            parse_facet_file("# nothing\n")

    def test_malformed_lines(self):
        with pytest.raises(MalformedLine):
            parse_facet_file("m 2\nsimplex 1\n")
        with pytest.raises(MalformedLine):
            parse_facet_file("m 2\nempty\nfacet 1\n")

    def test_round_trip_through_format(self, corpus_n3, rp2):
        for K in list(corpus_n3) + [rp2,
                                    SimplicialComplex.empty_complex(2),
                                    SimplicialComplex.void_complex(3)]:
            assert parse_facet_file(format_facet_file(K)) == K


class TestNamedRegistry:
    def test_cycle_four(self):
        K = named_complex("cycle", 4)
        assert K.facets == frozenset({(1, 2), (2, 3), (3, 4), (1, 4)})

    def test_points(self):
        K = named_complex("points", 3)
        assert K.facets == frozenset({(1,), (2,), (3,)})

    def test_rp2_has_ten_facets(self):
        assert len(named_complex("rp2-6").facets) == 10

    def test_skeleton(self):
        K = named_complex("skeleton", 1, 4)
        assert K.facets == frozenset(itertools.combinations((1, 2, 3, 4), 2))

    def test_boundary_simplex_of_dim_zero(self):
        assert named_complex("boundary-simplex", 0).is_empty_complex

    def test_unknown_name(self):
        with pytest.raises(Unsupported):
            named_complex("torus")

    def test_wrong_arity(self):
        with pytest.raises(Unsupported):
            named_complex("cycle", 4, 5)


class TestEnumeration:
    def test_counts(self):
        assert corpus_size(1) == 1
        assert corpus_size(2) == 2
        assert corpus_size(3) == 9

    def test_brute_force_counter_agrees(self):
        # independent counter: all families of nonempty subsets, filtered
        # to covering antichains
        for n in (1, 2, 3):
            subsets = [frozenset(c) for r in range(1, n + 1)
                       for c in itertools.combinations(range(1, n + 1), r)]
            count = 0
            for bits in itertools.product((0, 1), repeat=len(subsets)):
                family = [s for s, b in zip(subsets, bits) if b]
                if not family:
                    continue
                if any(a < b or b < a
                       for a, b in itertools.combinations(family, 2)):
                    continue
                if set().union(*family) != set(range(1, n + 1)):
                    continue
                count += 1
            assert corpus_size(n) == count

    def test_no_ghosts_and_deterministic(self):
        first = list(enumerate_complexes(3))
        second = list(enumerate_complexes(3))
        assert first == second
        for K in first:
            assert not K.ghost_vertices
            assert not K.is_void

    def test_out_of_range(self):
        with pytest.raises(Unsupported):
            list(enumerate_complexes(5))
        with pytest.raises(Unsupported):
            list(enumerate_complexes(0))
