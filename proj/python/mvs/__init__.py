"""Finite MV-algebras, their prime spectra and classifiers."""

from ._mvs import (  # noqa: F401
    Algebra,
    InputError,
    InternalConsistencyError,
    algebra_from_json,
    all_algebras,
    belluce,
    chain_products,
    classify,
    compact_opens,
    homogenize,
    ideals,
    in_VC,
    in_VK,
    is_local,
    is_perfect,
    is_semisimple,
    isomorphic,
    locally_homogeneous,
    lukasiewicz,
    maximal_ideals,
    normal_form_eval,
    normal_form_zeroset,
    primes,
    product,
    quotient,
    radical,
    rank,
    registry_ids,
    spec,
    trivial,
    validate,
    verify,
)

__all__ = [
    "Algebra",
    "InputError",
    "InternalConsistencyError",
    "algebra_from_json",
    "all_algebras",
    "belluce",
    "chain_products",
    "classify",
    "compact_opens",
    "homogenize",
    "ideals",
    "in_VC",
    "in_VK",
    "is_local",
    "is_perfect",
    "is_semisimple",
    "isomorphic",
    "locally_homogeneous",
    "lukasiewicz",
    "maximal_ideals",
    "normal_form_eval",
    "normal_form_zeroset",
    "primes",
    "product",
    "quotient",
    "radical",
    "rank",
    "registry_ids",
    "spec",
    "trivial",
    "validate",
    "verify",
]
