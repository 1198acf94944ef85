"""Decide whether a product of SU(2) conjugacy classes covers the whole group.

C(λ₁)···C(λₙ) = SU(2) iff every signed sum with j minus signs satisfies

    −(j−1)·π ≤ Σ ±λᵢ ≤ (n−j−1)·π

for all j up to ⌊n/2⌋.  A pattern and its negation carry the same two-sided
constraint, so only canonical patterns (minus-count ≤ n/2, ties broken
lexicographically) are kept and the system has 2^{n−1} members.

``paper_literal=True`` restricts the quantifier to j strictly below n/2.
For odd n that changes nothing; for even n it drops the balanced patterns
and wrongly accepts tuples such as (3π/4, π/4), whose reachable interval is
[π/2, π] rather than all of [0, π].  The default range is the corrected one.

The same system also falls out of the membership system on n+1 angles by a
formal replacement (λ_{n+1} → π where it appears with a plus sign,
−λ_{n+1} → 0 where it appears with a minus sign):
``derive_surjectivity_from_membership`` performs that derivation
mechanically, and equality with the direct generator is asserted in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .angles import Angle, ScaledValue, rational_sum
from .membership import (
    DEFAULT_CAP,
    CapExceededError,
    _scaled_nums,
    _signed_sums,
    mask_from_signs,
    membership_system,
    reachable,
    signs_from_mask,
)


@dataclass(frozen=True)
class TwoSidedInequality:
    """A constraint lower ≤ Σ signs[i]·λᵢ ≤ upper on a canonical sign pattern.

    Canonical means minus-count ≤ n/2, and for the balanced case (exactly
    n/2 minus signs) the pattern is the lexicographically smaller of the
    pattern/negation pair, i.e. it starts with a plus sign.
    """

    signs: tuple[int, ...]
    lower: ScaledValue
    upper: ScaledValue

    def __post_init__(self) -> None:
        if not self.signs:
            raise ValueError("empty sign pattern")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")
        object.__setattr__(self, "signs", tuple(self.signs))
        n, m = len(self.signs), self.signs.count(-1)
        if 2 * m > n or (2 * m == n and self.signs[0] == -1):
            raise ValueError(f"sign pattern {self.signs} is not canonical")

    @classmethod
    def from_json(cls, obj: dict) -> "TwoSidedInequality":
        return cls(
            tuple(obj["signs"]),
            ScaledValue.from_json(obj["lower"]),
            ScaledValue.from_json(obj["upper"]),
        )

    @property
    def minus_count(self) -> int:
        return self.signs.count(-1)

    def value(self, angles: Sequence[Angle]) -> ScaledValue:
        return rational_sum(self.signs, angles)

    def holds(self, angles: Sequence[Angle]) -> bool:
        v = self.value(angles)
        return self.lower <= v <= self.upper

    def to_json(self) -> dict:
        return {
            "signs": list(self.signs),
            "lower": self.lower.to_json(),
            "upper": self.upper.to_json(),
        }

    def __str__(self) -> str:
        body = " ".join(
            f"{'+' if s == 1 else '-'}λ{i + 1}" for i, s in enumerate(self.signs)
        )
        return f"{self.lower.format_pi()} ≤ {body} ≤ {self.upper.format_pi()}"


@dataclass(frozen=True)
class SurjectivityDecision:
    holds: bool
    violated: tuple[TwoSidedInequality, ...]

    def __bool__(self) -> bool:
        return self.holds


def _check_count(n: int, cap: int) -> None:
    if n < 1:
        raise ValueError("need at least one angle")
    if n > cap:
        raise CapExceededError(
            f"{n} angles would need 2^{n - 1} two-sided inequalities; cap is {cap}"
        )


def _canonical_masks(n: int, paper_literal: bool) -> Iterator[tuple[int, int]]:
    # (mask, minus-count) over canonical patterns, ascending mask order
    for mask in range(1 << n):
        j = mask.bit_count()
        if 2 * j > n:
            continue
        if 2 * j == n:
            if paper_literal or (mask >> (n - 1)) & 1:
                continue
        yield mask, j


def surjectivity_system(
    n: int, cap: int = DEFAULT_CAP, paper_literal: bool = False
) -> tuple[TwoSidedInequality, ...]:
    """The two-sided system equivalent to C(λ₁)···C(λₙ) = SU(2).

    One inequality −(j−1)π ≤ Σ±λᵢ ≤ (n−j−1)π per canonical pattern with j
    minus signs, j ≤ ⌊n/2⌋ (or j < n/2 under ``paper_literal``).  For n = 1
    the single constraint π ≤ λ₁ ≤ 0 is infeasible: one class never covers
    the group.
    """
    _check_count(n, cap)
    return tuple(
        TwoSidedInequality(signs_from_mask(n, mask), ScaledValue(1 - j), ScaledValue(n - j - 1))
        for mask, j in _canonical_masks(n, paper_literal)
    )


def is_surjective(
    angles: Sequence[Angle], cap: int = DEFAULT_CAP, paper_literal: bool = False
) -> SurjectivityDecision:
    """Decide C(λ₁)···C(λₙ) = SU(2) via the two-sided system, exactly."""
    angles = tuple(angles)
    n = len(angles)
    _check_count(n, cap)
    nums, den = _scaled_nums(angles)
    sums = _signed_sums(nums)
    violated = tuple(
        TwoSidedInequality(signs_from_mask(n, mask), ScaledValue(1 - j), ScaledValue(n - j - 1))
        for mask, j in _canonical_masks(n, paper_literal)
        if not (1 - j) * den <= sums[mask] <= (n - j - 1) * den
    )
    return SurjectivityDecision(not violated, violated)


def is_surjective_interval(angles: Sequence[Angle]) -> bool:
    """Surjectivity via the interval route: the reachable set is all of [0, π]."""
    return reachable(angles).is_full


def derive_surjectivity_from_membership(
    n: int, cap: int = DEFAULT_CAP
) -> tuple[TwoSidedInequality, ...]:
    """Derive the two-sided system from the membership system on n+1 angles.

    Covering the group means the membership system holds for every value of
    a free (n+1)-th angle; the binding cases are λ_{n+1} = π where it enters
    with a plus sign and λ_{n+1} = 0 where it enters with a minus sign.
    Each of the 2ⁿ membership inequalities thus loses its last term and
    becomes a one-sided bound on the first n angles; bounds on non-canonical
    patterns are negated into lower bounds, and the pairs are assembled into
    two-sided inequalities.  The result equals ``surjectivity_system(n)``.
    """
    if n < 1:
        raise ValueError("need at least one angle")
    base = membership_system(n + 1, cap=cap)
    lowers: dict[int, ScaledValue] = {}
    uppers: dict[int, ScaledValue] = {}
    for ineq in base.inequalities:
        head = ineq.signs[:-1]
        bound = ineq.bound - ScaledValue(1 if ineq.signs[-1] == 1 else 0)
        m = head.count(-1)
        mask = mask_from_signs(head)
        if 2 * m < n or (2 * m == n and head[0] == 1):
            assert mask not in uppers, "pattern produced twice"
            uppers[mask] = bound
        else:
            neg = mask ^ ((1 << n) - 1)
            assert neg not in lowers, "pattern produced twice"
            lowers[neg] = -bound
    assert set(lowers) == set(uppers), "replacement bookkeeping failed"
    return tuple(
        TwoSidedInequality(signs_from_mask(n, mask), lowers[mask], uppers[mask])
        for mask in sorted(uppers)
    )
