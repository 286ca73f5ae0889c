"""Deformed starlike/convex coefficient bounds with brute-force verification."""

from .pq_core import DomainError, PQParams, TruncatedSeries, pq_derivative, pq_integral, pq_number
from .classes import (
    CaratheodoryJet,
    MaMindaTarget,
    MemberJet,
    SchwarzJet,
    caratheodory_from_schwarz,
    convex_member,
    deformation_numbers,
    sample_schwarz_jet,
    starlike_member,
    subordination_residual,
)
from .bounds import (
    BoundReport,
    caratheodory_piecewise_bound,
    fs_bound_convex,
    fs_bound_starlike,
    fs_piecewise_convex,
    fs_piecewise_starlike,
    ma_minda_bound,
    refined_inequality_lhs,
    rho_thresholds,
    sigma_thresholds,
    v_convex,
    v_starlike,
)
from .oracle import (
    OracleConfig,
    SweepEntry,
    VerificationRecord,
    brute_force_caratheodory_max,
    brute_force_caratheodory_piecewise,
    summarize,
    sweep,
    verify_fs,
    verify_refined,
)
from .bernardi import (
    BernardiParams,
    bernardi_factor,
    bernardi_member,
    bernardi_transform,
    bernardi_transform_integral,
    fs_bound_bernardi,
    fs_piecewise_bernardi,
    refined_lhs_bernardi,
    thresholds_bernardi,
    verify_fs_bernardi,
)

__version__ = "0.1.0"

__all__ = [
    "BernardiParams",
    "BoundReport",
    "CaratheodoryJet",
    "DomainError",
    "MaMindaTarget",
    "MemberJet",
    "OracleConfig",
    "PQParams",
    "SchwarzJet",
    "SweepEntry",
    "TruncatedSeries",
    "VerificationRecord",
    "bernardi_factor",
    "bernardi_member",
    "bernardi_transform",
    "bernardi_transform_integral",
    "brute_force_caratheodory_max",
    "brute_force_caratheodory_piecewise",
    "caratheodory_from_schwarz",
    "caratheodory_piecewise_bound",
    "convex_member",
    "deformation_numbers",
    "fs_bound_bernardi",
    "fs_bound_convex",
    "fs_bound_starlike",
    "fs_piecewise_bernardi",
    "fs_piecewise_convex",
    "fs_piecewise_starlike",
    "ma_minda_bound",
    "pq_derivative",
    "pq_integral",
    "pq_number",
    "refined_inequality_lhs",
    "refined_lhs_bernardi",
    "rho_thresholds",
    "sample_schwarz_jet",
    "sigma_thresholds",
    "starlike_member",
    "subordination_residual",
    "summarize",
    "sweep",
    "thresholds_bernardi",
    "v_convex",
    "v_starlike",
    "verify_fs",
    "verify_fs_bernardi",
    "verify_refined",
]
