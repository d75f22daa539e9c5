"""Finite-group 2-cocycles, second cohomology, central extensions, and
projective unitary representations, computed exactly over Z_m with a
numerically verified matrix layer."""

from projcoh._core import (
    CentralExtension,
    Cochain,
    CohomologyResult,
    Error,
    FactorSystem,
    FiniteGroup,
    TrivializationCertificate,
    UnitaryRep,
    __version__,
    alternating_pairing,
    are_equivalent,
    build_extension,
    clock,
    coboundary,
    coboundary_truncated,
    cochain_text,
    cocycle_witness,
    cyclic,
    delta_squared,
    dihedral,
    direct_product,
    extension_isomorphism,
    extension_table_unchecked,
    extract_factor_system,
    from_cayley_table,
    is_coboundary,
    is_cocycle,
    is_normalized,
    lift_to_extension,
    max_abs,
    normalize,
    quaternion8,
    quotient_by_center_subgroup,
    random_cochain,
    random_cocycle,
    read_cochain_file,
    read_group_file,
    rephase,
    schwinger_rep,
    second_cohomology,
    selftest,
    shift,
    symmetric,
    twisted_regular_rep,
    unitary_rep,
    write_cochain_file,
    write_group_file,
)

__all__ = [
    "CentralExtension",
    "Cochain",
    "CohomologyResult",
    "Error",
    "FactorSystem",
    "FiniteGroup",
    "TrivializationCertificate",
    "UnitaryRep",
    "__version__",
    "alternating_pairing",
    "are_equivalent",
    "build_extension",
    "clock",
    "coboundary",
    "coboundary_truncated",
    "cochain_text",
    "cocycle_witness",
    "cyclic",
    "delta_squared",
    "dihedral",
    "direct_product",
    "extension_isomorphism",
    "extension_table_unchecked",
    "extract_factor_system",
    "from_cayley_table",
    "is_coboundary",
    "is_cocycle",
    "is_normalized",
    "lift_to_extension",
    "max_abs",
    "normalize",
    "quaternion8",
    "quotient_by_center_subgroup",
    "random_cochain",
    "random_cocycle",
    "read_cochain_file",
    "read_group_file",
    "rephase",
    "schwinger_rep",
    "second_cohomology",
    "selftest",
    "shift",
    "symmetric",
    "twisted_regular_rep",
    "unitary_rep",
    "write_cochain_file",
    "write_group_file",
]
