"""Exact motivic computations.

Arithmetic in the localized equivariant Grothendieck ring of varieties with a
square root of the Lefschetz class, motivic integration over SNC resolution
data, torus localization sums, and the refined degree-zero DT series of the
Hilbert scheme of points on affine 3-space.
"""

from motivic._core import (
    AtomTable,
    ModelError,
    MotivicClass,
    NonGenericActionError,
    ParseError,
    PlanePartition,
    SncModel,
    SpecializationError,
    UnsupportedSmashError,
    annulus_volume,
    bbs_series,
    compare_series,
    conjecture_series,
    euler_specialize,
    index_of,
    isolated_sum,
    localize,
    macmahon_counts,
    motivic_volume,
    nearby_cycle,
    parse,
    piece_volume,
    plane_partitions,
    print_canonical,
    rewrite_mu2,
    smash,
    snc_expansion,
    snc_integral,
    tangent_character,
    tangent_dimension,
    upsilon,
    vanishing_cycle,
    virtual_index,
    weight_specialize,
)

__all__ = [
    "AtomTable",
    "ModelError",
    "MotivicClass",
    "NonGenericActionError",
    "ParseError",
    "PlanePartition",
    "SncModel",
    "SpecializationError",
    "UnsupportedSmashError",
    "annulus_volume",
    "bbs_series",
    "compare_series",
    "conjecture_series",
    "euler_specialize",
    "index_of",
    "isolated_sum",
    "localize",
    "macmahon_counts",
    "motivic_volume",
    "nearby_cycle",
    "parse",
    "piece_volume",
    "plane_partitions",
    "print_canonical",
    "rewrite_mu2",
    "smash",
    "snc_expansion",
    "snc_integral",
    "tangent_character",
    "tangent_dimension",
    "upsilon",
    "vanishing_cycle",
    "virtual_index",
    "weight_specialize",
]

__version__ = "0.1.0"
