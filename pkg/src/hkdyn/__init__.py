"""Exact dynamics of lattice isometries modelling automorphisms of
irreducible holomorphic symplectic manifolds."""
from hkdyn.degrees import (
    DegreeSequence,
    check_log_concavity,
    degree_sequence,
    sym_power_matrix,
    verify_oguiso,
)
from hkdyn.errors import (
    DegenerateFormError,
    DimensionError,
    HkdynError,
    KindError,
    NotAnIsometryError,
)
from hkdyn.fibration import (
    Certificate,
    FibrationHypothesis,
    base_dim_bound,
    dnt_check,
    general_type_feasibility,
    primitivity_certificate,
)
from hkdyn.isometry import (
    Classification,
    Isometry,
    Kind,
    classify,
    growth_profile,
    invariant_isotropic_lines,
    verify_isometry,
)
from hkdyn.lattice import Lattice, Signature, catalog, evaluate, pair, signature

__version__ = "0.1.0"

__all__ = [
    "Certificate", "Classification", "DegenerateFormError", "DegreeSequence",
    "DimensionError", "FibrationHypothesis", "HkdynError", "Isometry", "Kind",
    "KindError", "Lattice", "NotAnIsometryError", "Signature", "base_dim_bound",
    "catalog", "check_log_concavity", "classify", "degree_sequence", "dnt_check",
    "evaluate", "general_type_feasibility", "growth_profile",
    "invariant_isotropic_lines", "pair", "primitivity_certificate", "signature",
    "sym_power_matrix", "verify_isometry", "verify_oguiso",
]
