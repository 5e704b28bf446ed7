"""Exact cohomology and multigraded Hilbert functions of equivariant
reflexive sheaves on smooth complete toric varieties, described by their
ray filtrations."""

from .cohomology import (
    CharacterBox,
    SheafCohomology,
    cech_cohomology,
    enumeration_box,
    euler_character,
    euler_characteristic,
    h0_character,
    h0_dim,
    h1_surface,
    hn_character,
    hn_dim,
    sigma_piece,
)
from .config import JobConfig, load_config, parse_config
from .errors import (
    ConfigError,
    InternalConsistencyError,
    UnboundedSystemError,
    UnsupportedVarietyError,
)
from .filtration import (
    EquivariantReflexiveSheaf,
    KlyachkoFiltration,
    PresentationDegrees,
    delta_normalization,
    jump_bounds_from_presentation,
    line_bundle,
    structure_sheaf,
    twist,
    validate,
)
from .hilbert import (
    HalfPlane,
    RationalPolynomial,
    SupportRegion,
    bernoulli_number,
    bernoulli_polynomial,
    faulhaber_sum,
    format_polynomial,
    hilbert_function,
    hilbert_polynomial,
    in_support_lower_bound,
    in_support_upper_bound,
    intersection_dim,
    lower_support_region,
    rank1_hilbert_polynomial,
    regularity_region,
    regularity_thresholds,
    simplex_sum,
    upper_support_regions,
)
from .monomial import MonomialIdeal, sigma_piece_dim
from .polytopes import (
    IntervalConstraintSystem,
    assemble_slices,
    feasible_metasystem,
    feasible_system1,
    omega_system,
    psi_m_sliced,
    psi_n,
    psi_points,
)
from .rational_linalg import Subspace, intersect, span, subspace_sum
from .toric import (
    Cone,
    ToricVariety,
    build_variety,
    hirzebruch,
    projective_space,
    split_bundle,
    split_data,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
