"""Exact-arithmetic toolkit for simplicial complexes, their Stanley-Reisner
Tor algebras, and the homology of the associated polyhedral products."""

from .complexes import Face, SimplicialComplex, as_face, face_key
from .homology import (Chain, Coefficients, GF, HomologyGroups, INTEGERS,
                       RATIONALS, SmithNormalForm, boundary_matrix,
                       homology_basis, is_acyclic, reduced_homology,
                       smith_normal_form, snf_invariants)
from .structure import (StructureVerdict, extractibility_certificate,
                        find_shelling, greedy_collapse, is_sequentially_cm,
                        is_shifted, is_vertex_decomposable, verify_shelling)
from .spanning import (SpanningFacetCertificate, SphereList,
                       chain_vertex_part, dual_wedge_prediction,
                       spanning_from_shelling, spanning_mod_p,
                       verify_certificate)
from .tor import (BigradedBettiTable, GolodVerdict, TorClass,
                  baskakov_product, hochster_table, is_golod, koszul_table,
                  tor_product)
from .polyprod import (DecompositionReport, complex_ma_homology,
                       predicted_ma_homology, real_ma_homology,
                       verify_decomposition, verify_wedge_of_spheres)
from .catalog import (enumerate_complexes, format_facet_file, named_complex,
                      parse_facet_file)

__version__ = "0.1.0"

__all__ = [
    "BigradedBettiTable", "Chain", "Coefficients", "DecompositionReport",
    "Face", "GF", "GolodVerdict", "HomologyGroups", "INTEGERS", "RATIONALS",
    "SimplicialComplex", "SmithNormalForm", "SpanningFacetCertificate",
    "SphereList", "StructureVerdict", "TorClass", "as_face",
    "baskakov_product", "boundary_matrix", "chain_vertex_part",
    "complex_ma_homology", "dual_wedge_prediction", "enumerate_complexes",
    "extractibility_certificate", "face_key", "find_shelling",
    "format_facet_file", "greedy_collapse", "hochster_table",
    "homology_basis", "is_acyclic", "is_golod", "is_sequentially_cm",
    "is_shifted", "is_vertex_decomposable", "koszul_table", "named_complex",
    "parse_facet_file", "predicted_ma_homology", "real_ma_homology",
    "reduced_homology", "smith_normal_form", "snf_invariants",
    "spanning_from_shelling", "spanning_mod_p", "tor_product",
    "verify_certificate", "verify_decomposition", "verify_shelling",
    "verify_wedge_of_spheres",
]
