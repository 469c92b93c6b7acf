"""Torsor classification toolkit.

Finite-group cohomology by enumeration, Weil-Chatelet class arithmetic,
elliptic curve point counts over prime fields, exact real root counting,
congruence-subgroup orbit checks, and finite split-Brauer models, all backed
by the C++ core.
"""

from ._core import (  # noqa: F401
    CheckFailure,
    ValidationError,
    aut_group_order,
    classify,
    cli_run,
    cocycle_count,
    cubic_point_count,
    cubic_rational_point,
    curve_group_order,
    derived_related,
    element_order,
    fiber_derived_witness,
    gamma0_size,
    h1_real_size,
    h1_sizes,
    iso_related,
    moduli_label,
    orbit,
    picd_values,
    polarized_check,
    real_two_torsion,
    same_cyclic_in_quotient,
    sp_size,
    sturm_real_roots,
    subgroup_generated,
    unit_group,
    weierstrass_from_cubic,
)

__all__ = [
    "CheckFailure",
    "ValidationError",
    "aut_group_order",
    "classify",
    "cli_run",
    "cocycle_count",
    "cubic_point_count",
    "cubic_rational_point",
    "curve_group_order",
    "derived_related",
    "element_order",
    "fiber_derived_witness",
    "gamma0_size",
    "h1_real_size",
    "h1_sizes",
    "iso_related",
    "moduli_label",
    "orbit",
    "picd_values",
    "polarized_check",
    "real_two_torsion",
    "same_cyclic_in_quotient",
    "sp_size",
    "sturm_real_roots",
    "subgroup_generated",
    "unit_group",
    "weierstrass_from_cubic",
]
