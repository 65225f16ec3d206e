"""Ordinary parts and Ext^1 dimensions for ordinary representations of p-adic reductive groups."""

from .characters import (
    CharacterGroup,
    FieldData,
    Mode,
    PadicCharacter,
    TorusCharacter,
    compose_root,
    cyclotomic,
    reflect,
    trivial,
    trivial_torus,
    weyl_twist,
)
from .errors import (
    FieldMismatch,
    GroupTooLarge,
    IndexOutOfRange,
    ModeMismatch,
    NonFiniteType,
    NotLCharacter,
    OrdextError,
    UnknownName,
    ValidationError,
    ValidityDomain,
)
from .ext_calculator import (
    ExtReport,
    autoext_modp,
    classify_irregular,
    dim_ext1_principal_series,
    ext_ordinary,
)
from .ordinary_parts import GradedPiece, OrdinaryRepDescriptor, bruhat_graded, hord, hord_principal_series
from .root_datum import (
    ParabolicData,
    RankOneClass,
    RootDatum,
    builtin,
    center_component_group,
    classify_rank_one,
    example_card,
    generate_roots,
    is_center_connected,
)
from .weyl import WeylGroup, alpha_w, longest_element, n_w_dimension, w_BQ, w_sigma, weyl_group

__version__ = "0.1.0"
