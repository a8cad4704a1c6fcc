"""Exact k-jet ampleness criteria for line bundles on smooth complete toric varieties."""

from .analysis import Report, analyze
from .divisors import (
    NOT_SPANNED,
    LineBundle,
    SupportFunction,
    anticanonical_bundle,
    canonical_bundle,
    divisor,
    evaluate,
    is_k_convex,
    is_spanned,
    linearly_equivalent,
    max_convexity,
    principal_divisor,
    pullback_minus_exceptional,
    support_function,
)
from .fan import Fan, Wall, blow_up, del_pezzo_6, hirzebruch, is_isomorphic, projective_space
from .fanfile import format_fan_file, parse_fan_file
from .intersection import (
    adjoint_nef_report,
    intersection_number,
    intersection_table,
    is_nef,
    jet_level,
    seshadri_global,
    wall_relation,
)
from .jets import JetSpec, is_jet_surjective, jet_matrix, oracle_jet_level
from .polytope import edge_length, lattice_points, polytope_of, section_lemma_point, vertices
from .surface import (
    higher_adjoint_fixed_point_jets,
    higher_adjoint_simultaneous,
    k_reduction_check,
)

__version__ = "0.1.0"
