"""Periodic symmetries of closed orientable surfaces.

Conjugacy and 3-sphere extendability of finite cyclic symmetries from
quotient data, enumeration of extendable classes by genus, a brute-force
census oracle at small order, and surface embeddings in lens spaces.
"""

from .enumeration import (
    CensusBucket,
    ParameterRow,
    datum_from_parameters,
    enumerate_extendable,
    iter_valid_data,
    oracle_census,
    row_from,
    verify_uniqueness,
)
from .extendability import (
    ALL_TYPES,
    CHECKS,
    ExtendabilityVerdict,
    canonical_f0_invariant,
    check_mm,
    check_mp,
    check_pm,
    check_pp,
    classify_all,
    compute_k,
    compute_m0,
    normalize,
)
from .invariants import (
    ConjugacyInvariant,
    IsotropyInvariant,
    are_conjugate,
    conjugacy_invariant,
    h1,
    h2,
    isotropy,
    same_cyclic_group,
    twist_minimal_key,
)
from .lens import (
    LensSpace,
    admits_genus3,
    admits_klein_bottle,
    admits_projective_plane,
    core_bounds,
    klein_homology_images,
    lens_homeomorphic,
    parity_obstruction,
    torsion_image,
)
from .numtheory import (
    Residue,
    coprime_shift,
    crt_solve,
    divisors,
    generator_decompose,
    order_mod,
    unit_lift,
    units_of,
)
from .orbifold import (
    SymmetryDatum,
    datum_from_dict,
    datum_to_dict,
    datum_to_json,
    euler_genus,
    is_orientation_reversing,
    parse_datum,
    power_twist,
    reduce_values_mod,
    validate,
)

__version__ = "0.1.0"
