"""Free-algebra endomorphism monoids and their automorphisms."""

import json as _json

from ._core import (
    Variety,
    apply_endo,
    canon,
    compose,
    invert,
    invert_automorphism,
    is_automorphism,
    main_permutation,
    matrix,
    multiply,
    suite_group_words,
    suite_inverse_system,
    suite_mirror_classification,
    suite_semigroup_binary,
    variety,
    verify_aut,
)

__all__ = [
    "Variety",
    "apply_endo",
    "canon",
    "compose",
    "invert",
    "invert_automorphism",
    "is_automorphism",
    "main_permutation",
    "matrix",
    "multiply",
    "report",
    "suite_group_words",
    "suite_inverse_system",
    "suite_mirror_classification",
    "suite_semigroup_binary",
    "variety",
    "verify_aut",
]


def report(raw):
    """Parse a suite's JSON report string into a dict."""
    return _json.loads(raw)
