"""Hilbert functions and graded Betti tables of codimension-3 almost
complete intersection artinian algebras, with exact cross-checking oracles."""

from .cas import export_cas, script_is_balanced
from .classify import (
    AciFamily,
    AciTable,
    GaetaResult,
    GorensteinDelta,
    PosetEdge,
    TablePoset,
    allowed_couples,
    cancel_ah,
    cancel_couple,
    d_star,
    delta_high,
    delta_low,
    enumerate_tables,
    gaeta_check,
    maximal_table,
    t_max,
)
from .errors import DomainError
from .hilbert import (
    BettiTable,
    DegreeTuple,
    HilbertFunction,
    ci_hilbert,
    difference,
    hilbert_from_betti,
    koszul_table,
    min_generator_bound,
    recognize_ci,
    socle_degree,
)
from .koszul import betti_numbers, strand_matrices, verify_resolution
from .liaison import (
    LinkDatum,
    MappingCone,
    ci_link_identity,
    link_hilbert,
    mapping_cone_twists,
)
from .monomials import (
    Monomial,
    MonomialIdeal,
    aci_construction,
    ci_type,
    colon,
    hilbert_function,
    intersect,
    is_artinian,
    minimalize,
    rigid_witness,
    standard_monomials,
)
from .pfaffians import (
    AlternatingMatrix,
    PolyRing,
    SparsePolynomial,
    WitnessIdeals,
    alt_matrix,
    pf_squared_equals_det,
    pfaffian,
    pfaffian_int,
    pfaffian_last_row,
    sub_pfaffians,
    witness_ideals_a3_h5,
)
from .verify import CheckResult, Report, verify_suite

__version__ = "0.1.0"
