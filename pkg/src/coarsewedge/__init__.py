"""Symbolic retractions, projections and Markushevich bases on ordinal
segments and trees carrying the coarse wedge topology."""

from .ordinals import (
    ALEPH0,
    ALEPH1,
    ALEPH2,
    OMEGA,
    OMEGA1,
    OMEGA2,
    ONE,
    ZERO,
    CardClass,
    CofClass,
    Ord,
    OrdinalError,
    OrdinalOverflowError,
    OrdinalParseError,
    add,
    cardinality_class,
    cofinality,
    compare,
    format_ordinal,
    from_int,
    fundamental_sequence,
    is_limit,
    is_successor,
    parse_ordinal,
    predecessor,
    subtract,
    successor,
)
from .space import (
    ANON,
    ROOT,
    AdmissibilityError,
    AdmissibleSet,
    Atom,
    Classification,
    Edge,
    PointAddr,
    ScaffoldTree,
    SpaceError,
    Valdivia,
    build_space,
    classify,
    format_atoms,
    format_point,
    height,
    i_class,
    intersect_admissible,
    is_countable_member,
    is_segment,
    is_subset,
    least_above,
    make_admissible,
    parse_atoms,
    parse_point,
    point_cmp,
    point_cofinality,
    point_leq,
    point_ord,
    point_predecessor,
    reorder_to_r1,
    retract,
    s_class,
    seg_point,
    segment,
    set_weight,
    sigma_continuity_ok,
    tree_height,
    union_admissible,
    valdivia_sufficient,
    wedge,
    weight,
)
from .functions import (
    AtomicMeasure,
    FunctionError,
    StepFunction,
    adjoint,
    atomic_measure,
    combine_measures,
    dirac,
    evaluate,
    format_function,
    format_measure,
    in_induced_D,
    indicator,
    linear_combine,
    pair,
    parse_function,
    parse_measure,
    plateau_representatives,
    project,
    step_function,
    sup_norm,
)
from .mbasis import (
    BasisError,
    BasisPair,
    IdentityXi,
    MbazeSwapXi,
    TableXi,
    XiRule,
    biorthogonality_check,
    generator_check,
    generator_phi,
    p_pred,
    parse_xi_rule,
    pri_basis,
    strong_reconstruct,
    tail_basis,
    xi_image_closure,
    z_gap,
)
from .report import CaseRecord, VerificationReport
from .verifier import (
    ChainFamily,
    ClosureRecord,
    FiniteModelOracle,
    VerifierError,
    bounded_sigma_closure,
    chain_limit_check,
    check_nested_commutation,
    check_skeleton_axioms,
    escaping_atom,
    find_noncommuting_pair,
    finite_model_oracle,
    one_plichko_segment,
    repro_mbaze_divna,
    suite_chain,
    suite_commute,
    suite_duality,
    suite_oracle,
    suite_plichko,
    suite_sigma,
    suite_skeleton,
)

__all__ = [
    # ordinals
    "ALEPH0", "ALEPH1", "ALEPH2", "OMEGA", "OMEGA1", "OMEGA2", "ONE", "ZERO",
    "CardClass", "CofClass", "Ord", "OrdinalError", "OrdinalOverflowError",
    "OrdinalParseError", "add", "cardinality_class", "cofinality", "compare",
    "format_ordinal", "from_int", "fundamental_sequence", "is_limit",
    "is_successor", "parse_ordinal", "predecessor", "subtract", "successor",
    # space
    "ANON", "ROOT", "AdmissibilityError", "AdmissibleSet", "Atom",
    "Classification", "Edge", "PointAddr", "ScaffoldTree", "SpaceError",
    "Valdivia", "build_space", "classify", "format_atoms", "format_point",
    "height", "i_class", "intersect_admissible", "is_countable_member",
    "is_segment", "is_subset", "least_above", "make_admissible", "parse_atoms",
    "parse_point", "point_cmp", "point_cofinality", "point_leq", "point_ord",
    "point_predecessor", "reorder_to_r1", "retract", "s_class", "seg_point",
    "segment", "set_weight", "sigma_continuity_ok", "tree_height",
    "union_admissible", "valdivia_sufficient", "wedge", "weight",
    # functions & measures
    "AtomicMeasure", "FunctionError", "StepFunction", "adjoint",
    "atomic_measure", "combine_measures", "dirac", "evaluate",
    "format_function", "format_measure", "in_induced_D", "indicator",
    "linear_combine", "pair", "parse_function", "parse_measure",
    "plateau_representatives", "project", "step_function", "sup_norm",
    # bases
    "BasisError", "BasisPair", "IdentityXi", "MbazeSwapXi", "TableXi",
    "XiRule", "biorthogonality_check", "generator_check", "generator_phi",
    "p_pred", "parse_xi_rule", "pri_basis", "strong_reconstruct", "tail_basis",
    "xi_image_closure", "z_gap",
    # reports & verifier
    "CaseRecord", "VerificationReport", "ChainFamily", "ClosureRecord",
    "FiniteModelOracle", "VerifierError", "bounded_sigma_closure",
    "chain_limit_check", "check_nested_commutation", "check_skeleton_axioms",
    "escaping_atom", "find_noncommuting_pair", "finite_model_oracle",
    "one_plichko_segment", "repro_mbaze_divna", "suite_chain", "suite_commute",
    "suite_duality", "suite_oracle", "suite_plichko", "suite_sigma",
    "suite_skeleton",
]
