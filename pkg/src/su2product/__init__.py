"""Exact decision procedures for products of SU(2) conjugacy classes.

A conjugacy class of SU(2) is determined by its class angle λ ∈ [0, π].
This package decides, with exact rational arithmetic, when a product of
classes C(λ₁)···C(λ_N) contains the identity and when it equals all of
SU(2), by three mutually cross-checking routes (signed-sum inequality
systems, reachable-interval propagation, and CP¹ quantum-cohomology word
products), all verified against a seeded Monte Carlo matrix oracle.
"""

from .angles import (
    Angle,
    AngleInterval,
    AngleRangeError,
    AngleSyntaxError,
    DEFAULT_MAX_DENOMINATOR,
    ScaledValue,
    angle_parse,
    rational_sum,
)
from .membership import (
    DEFAULT_CAP,
    CapExceededError,
    InequalitySystem,
    MembershipDecision,
    SignedInequality,
    contains_identity,
    contains_identity_interval,
    interval_step,
    mask_from_signs,
    membership_system,
    reachable,
    signs_from_mask,
)
from .qh import (
    POINT,
    QHClass,
    SchubertWord,
    UNIT,
    qh_inequality,
    qh_mul,
    qh_system,
    qh_word_product,
)
from .su2 import (
    SU2Element,
    SampleReport,
    class_angle,
    class_sample,
    empirical_reachable,
    haar_sample,
    su2_mul,
)
from .surjectivity import (
    SurjectivityDecision,
    TwoSidedInequality,
    derive_surjectivity_from_membership,
    is_surjective,
    is_surjective_interval,
    surjectivity_system,
)

__version__ = "0.1.0"

__all__ = [
    "Angle",
    "AngleInterval",
    "AngleRangeError",
    "AngleSyntaxError",
    "CapExceededError",
    "DEFAULT_CAP",
    "DEFAULT_MAX_DENOMINATOR",
    "InequalitySystem",
    "MembershipDecision",
    "POINT",
    "QHClass",
    "SU2Element",
    "SampleReport",
    "ScaledValue",
    "SchubertWord",
    "SignedInequality",
    "SurjectivityDecision",
    "TwoSidedInequality",
    "UNIT",
    "angle_parse",
    "class_angle",
    "class_sample",
    "contains_identity",
    "contains_identity_interval",
    "derive_surjectivity_from_membership",
    "empirical_reachable",
    "haar_sample",
    "interval_step",
    "is_surjective",
    "is_surjective_interval",
    "mask_from_signs",
    "membership_system",
    "qh_inequality",
    "qh_mul",
    "qh_system",
    "qh_word_product",
    "rational_sum",
    "reachable",
    "signs_from_mask",
    "su2_mul",
    "surjectivity_system",
]
