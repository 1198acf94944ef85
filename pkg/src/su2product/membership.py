"""Decide whether a product of SU(2) conjugacy classes contains the identity.

Two independent routes are implemented and cross-checked by the test suite:

* the signed-sum system: I ∈ C(λ₁)···C(λ_N) iff for every sign pattern
  whose minus-count m satisfies m ≡ N−1 (mod 2),
  Σ ±λᵢ ≤ (N−1−m)·π — a system of exactly 2^{N−1} inequalities;
* interval propagation: the class angles reachable by a product of classes
  form a closed interval, grown one factor at a time from [λ₁, λ₁] by
  ``interval_step``; the identity is reachable from angles+[λ] iff λ lies
  in the interval reached from angles.

The system route is exponential in N and is gated by a cap; the interval
route is linear and has no practical limit.  Both are exact: all bounds
are integer multiples of pi compared against rational signed sums.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .angles import Angle, AngleInterval, ScaledValue, rational_sum

DEFAULT_CAP = 20


class CapExceededError(ValueError):
    """The requested sign-pattern system exceeds the configured cap."""


def signs_from_mask(n: int, mask: int) -> tuple[int, ...]:
    """Decode a sign pattern from a bitmask (MSB = first angle, 1 = minus)."""
    return tuple(-1 if (mask >> (n - 1 - i)) & 1 else 1 for i in range(n))


def mask_from_signs(signs: Sequence[int]) -> int:
    mask = 0
    for s in signs:
        mask = (mask << 1) | (s == -1)
    return mask


@dataclass(frozen=True)
class SignedInequality:
    """One constraint Σ signs[i]·λᵢ ≤ bound, with bound a multiple of pi."""

    signs: tuple[int, ...]
    bound: ScaledValue

    def __post_init__(self) -> None:
        if not self.signs:
            raise ValueError("empty sign pattern")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")
        object.__setattr__(self, "signs", tuple(self.signs))

    @classmethod
    def from_json(cls, obj: dict) -> "SignedInequality":
        return cls(tuple(obj["signs"]), ScaledValue.from_json(obj["bound"]))

    @property
    def minus_count(self) -> int:
        return self.signs.count(-1)

    def lhs(self, angles: Sequence[Angle]) -> ScaledValue:
        return rational_sum(self.signs, angles)

    def holds(self, angles: Sequence[Angle]) -> bool:
        return self.lhs(angles) <= self.bound

    def to_json(self) -> dict:
        return {"signs": list(self.signs), "bound": self.bound.to_json()}

    def __str__(self) -> str:
        body = " ".join(
            f"{'+' if s == 1 else '-'}λ{i + 1}" for i, s in enumerate(self.signs)
        )
        return f"{body} ≤ {self.bound.format_pi()}"


@dataclass(frozen=True)
class InequalitySystem:
    count_angles: int
    inequalities: tuple[SignedInequality, ...]

    @classmethod
    def from_json(cls, obj: dict) -> "InequalitySystem":
        return cls(int(obj["n"]), tuple(SignedInequality.from_json(i) for i in obj["ineqs"]))

    def to_json(self) -> dict:
        return {"n": self.count_angles, "ineqs": [i.to_json() for i in self.inequalities]}

    def as_canonical_set(self) -> frozenset:
        return frozenset((i.signs, i.bound.frac) for i in self.inequalities)

    def __len__(self) -> int:
        return len(self.inequalities)

    def __iter__(self) -> Iterator[SignedInequality]:
        return iter(self.inequalities)


@dataclass(frozen=True)
class MembershipDecision:
    holds: bool
    violated: tuple[SignedInequality, ...]

    def __bool__(self) -> bool:
        return self.holds


def _check_count(n: int, cap: int) -> None:
    if n < 1:
        raise ValueError("need at least one angle")
    if n > cap:
        raise CapExceededError(
            f"{n} angles would need 2^{n - 1} inequalities; cap is {cap}"
        )


def _valid_masks(n: int) -> Iterator[tuple[int, int]]:
    # yields (mask, minus-count) for patterns with m ≡ n-1 (mod 2), ascending
    parity = (n - 1) & 1
    for mask in range(1 << n):
        m = mask.bit_count()
        if (m & 1) == parity:
            yield mask, m


def membership_system(n: int, cap: int = DEFAULT_CAP) -> InequalitySystem:
    """The 2^{N−1} inequalities equivalent to I ∈ C(λ₁)···C(λ_N).

    Sign patterns are enumerated lexicographically with + before −; a
    pattern with m minus signs (m ≡ N−1 mod 2) is bounded by (N−1−m)·π.
    """
    _check_count(n, cap)
    ineqs = tuple(
        SignedInequality(signs_from_mask(n, mask), ScaledValue(n - 1 - m))
        for mask, m in _valid_masks(n)
    )
    return InequalitySystem(n, ineqs)


def _signed_sums(nums: Sequence[int]) -> list[int]:
    """All 2^N signed sums of nums; index bits, MSB first, give the pattern."""
    sums = [0]
    for x in nums:
        sums = [v for s in sums for v in (s + x, s - x)]
    return sums


def _scaled_nums(angles: Sequence[Angle]) -> tuple[list[int], int]:
    den = math.lcm(*(a.den for a in angles))
    return [a.num * (den // a.den) for a in angles], den


def contains_identity(angles: Sequence[Angle], cap: int = DEFAULT_CAP) -> MembershipDecision:
    """Decide I ∈ C(λ₁)···C(λ_N) by checking every signed-sum inequality.

    Returns the decision together with all violated inequalities (empty when
    the decision is positive).  Exact integer arithmetic throughout.
    """
    angles = tuple(angles)
    n = len(angles)
    _check_count(n, cap)
    nums, den = _scaled_nums(angles)
    sums = _signed_sums(nums)
    violated = tuple(
        SignedInequality(signs_from_mask(n, mask), ScaledValue(n - 1 - m))
        for mask, m in _valid_masks(n)
        if sums[mask] > (n - 1 - m) * den
    )
    return MembershipDecision(not violated, violated)


def interval_step(current: AngleInterval, step: Angle) -> AngleInterval:
    """Grow a reachable interval by one conjugacy-class factor.

    Pointwise, an element of class angle μ times an element of C(λ) can land
    in any class angle of [|μ−λ|, min(μ+λ, 2π−μ−λ)].  Over μ ∈ [a, b] both
    endpoint functions are continuous and the per-μ intervals are nonempty,
    so the union is the closed interval

        lo = max(a−λ, λ−b, 0)
        hi = π               if a ≤ π−λ ≤ b   (the upper envelope peaks inside)
           = b+λ             if b < π−λ       (envelope increasing on [a, b])
           = 2π−a−λ          otherwise        (envelope decreasing on [a, b])
    """
    a, b, lam = current.lo.frac, current.hi.frac, step.frac
    lo = max(a - lam, lam - b, Fraction(0))
    if a <= 1 - lam <= b:
        hi = Fraction(1)
    elif b < 1 - lam:
        hi = b + lam
    else:
        hi = 2 - a - lam
    assert lo <= hi, (current, step)
    return AngleInterval(Angle.from_fraction(lo), Angle.from_fraction(hi))


def reachable(angles: Sequence[Angle]) -> AngleInterval:
    """The exact set of class angles attained by C(λ₁)···C(λ_N).

    Folds ``interval_step`` from the degenerate interval [λ₁, λ₁]; the result
    is also the set of λ with I ∈ C(λ₁)···C(λ_N)C(λ), because in SU(2) every
    element is conjugate to its inverse.
    """
    angles = tuple(angles)
    if not angles:
        raise ValueError("need at least one angle")
    acc = AngleInterval.point(angles[0])
    for lam in angles[1:]:
        acc = interval_step(acc, lam)
    return acc


def contains_identity_interval(angles: Sequence[Angle]) -> bool:
    """Membership decided by interval propagation instead of the system.

    Linear in the number of angles; used as the cross-checking route.  For a
    single class the product contains I iff the class is C(0) = {I}.
    """
    angles = tuple(angles)
    if not angles:
        raise ValueError("need at least one angle")
    if len(angles) == 1:
        return angles[0].num == 0
    return reachable(angles[:-1]).contains(angles[-1])
