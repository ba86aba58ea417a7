"""Exact linear algebra over the rationals and prime fields, graded."""

from .fields import GF, QQ, field_from_name
from .graded import (
    GradedVect,
    LinMap,
    QuotPresentation,
    SubPresentation,
    Vec,
    add_maps,
    assoc,
    assoc_inv,
    braiding,
    coequalizer_lin,
    coev_map,
    compose,
    curry,
    double_dual_iso,
    dual,
    dual_map,
    equalizer_lin,
    ev_map,
    factor_through_include,
    factor_through_quotient,
    hom_map,
    hom_space,
    hom_tensor_iso,
    hom_tensor_iso_inv,
    identity_map,
    lands_in_sub,
    linmap_to_vec,
    pairing,
    scale_map,
    sub_maps,
    tensor,
    tensor_map,
    tensor_vec,
    uncurry,
    unit_left,
    unit_left_inv,
    unit_right,
    unit_right_inv,
    unit_space,
    vec_to_linmap,
    zero_map,
    zero_space,
    zero_vec,
)
from .matrix import Matrix

__all__ = [
    "GF",
    "QQ",
    "field_from_name",
    "GradedVect",
    "LinMap",
    "Matrix",
    "QuotPresentation",
    "SubPresentation",
    "Vec",
    "add_maps",
    "assoc",
    "assoc_inv",
    "braiding",
    "coequalizer_lin",
    "coev_map",
    "compose",
    "curry",
    "double_dual_iso",
    "dual",
    "dual_map",
    "equalizer_lin",
    "ev_map",
    "factor_through_include",
    "factor_through_quotient",
    "hom_map",
    "hom_space",
    "hom_tensor_iso",
    "hom_tensor_iso_inv",
    "identity_map",
    "lands_in_sub",
    "linmap_to_vec",
    "pairing",
    "scale_map",
    "sub_maps",
    "tensor",
    "tensor_map",
    "tensor_vec",
    "uncurry",
    "unit_left",
    "unit_left_inv",
    "unit_right",
    "unit_right_inv",
    "unit_space",
    "vec_to_linmap",
    "zero_map",
    "zero_space",
    "zero_vec",
]
