"""Exact arithmetic for class angles that are rational multiples of pi.

An ``Angle`` is a point of [0, pi] stored as an exact fraction of pi; a
``ScaledValue`` is an unconstrained rational multiple of pi used for signed
sums and inequality bounds.  Every predicate downstream decides its
inequalities on these exact values with integer arithmetic, never floats.
Decimal radian input is admitted but snapped to a rational (bounded
denominator) and flagged, so approximation happens once, at the boundary.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

DEFAULT_MAX_DENOMINATOR = 10**6


class AngleSyntaxError(ValueError):
    """Text does not parse as an angle."""


class AngleRangeError(ValueError):
    """Angle value lies outside [0, pi]."""


def _format_pi(num: int, den: int) -> str:
    if num == 0:
        return "0"
    sign = "-" if num < 0 else ""
    n = abs(num)
    head = "π" if n == 1 else f"{n}π"
    return f"{sign}{head}" if den == 1 else f"{sign}{head}/{den}"


@dataclass(frozen=True)
class ScaledValue:
    """A normalized rational multiple of pi: (num/den)·π, den >= 1."""

    num: int
    den: int = 1

    def __post_init__(self) -> None:
        if self.den == 0:
            raise ZeroDivisionError("zero denominator")
        f = Fraction(self.num, self.den)
        object.__setattr__(self, "num", f.numerator)
        object.__setattr__(self, "den", f.denominator)

    @classmethod
    def from_fraction(cls, f: Fraction) -> "ScaledValue":
        return cls(f.numerator, f.denominator)

    @classmethod
    def from_json(cls, obj: dict) -> "ScaledValue":
        return cls(int(obj["num"]), int(obj["den"]))

    @property
    def frac(self) -> Fraction:
        return Fraction(self.num, self.den)

    def radians(self) -> float:
        return self.num / self.den * math.pi

    def to_json(self) -> dict:
        return {"num": self.num, "den": self.den}

    def __neg__(self) -> "ScaledValue":
        return ScaledValue(-self.num, self.den)

    def __add__(self, other: "ScaledValue") -> "ScaledValue":
        return ScaledValue.from_fraction(self.frac + other.frac)

    def __sub__(self, other: "ScaledValue") -> "ScaledValue":
        return ScaledValue.from_fraction(self.frac - other.frac)

    # den > 0 on both sides, so cross-multiplication preserves order
    def __lt__(self, other: "ScaledValue") -> bool:
        return self.num * other.den < other.num * self.den

    def __le__(self, other: "ScaledValue") -> bool:
        return self.num * other.den <= other.num * self.den

    def __gt__(self, other: "ScaledValue") -> bool:
        return other < self

    def __ge__(self, other: "ScaledValue") -> bool:
        return other <= self

    def __str__(self) -> str:
        return f"{self.num}/{self.den}" if self.den != 1 else str(self.num)

    def format_pi(self) -> str:
        return _format_pi(self.num, self.den)


@dataclass(frozen=True)
class Angle:
    """A class angle in [0, pi], stored exactly as (num/den)·π in lowest terms.

    ``approx`` marks values that were snapped from decimal radians; it is
    excluded from equality and hashing, so a snapped angle compares equal to
    the same exact rational.
    """

    num: int
    den: int = 1
    approx: bool = field(default=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.den == 0:
            raise ZeroDivisionError("zero denominator")
        f = Fraction(self.num, self.den)
        if not 0 <= f <= 1:
            raise AngleRangeError(f"{f}·π is outside [0, π]")
        object.__setattr__(self, "num", f.numerator)
        object.__setattr__(self, "den", f.denominator)

    @classmethod
    def zero(cls) -> "Angle":
        return cls(0)

    @classmethod
    def pi(cls) -> "Angle":
        return cls(1)

    @classmethod
    def from_fraction(cls, f: Fraction, approx: bool = False) -> "Angle":
        return cls(f.numerator, f.denominator, approx)

    @classmethod
    def from_json(cls, obj: dict) -> "Angle":
        return cls(int(obj["num"]), int(obj["den"]))

    @property
    def frac(self) -> Fraction:
        return Fraction(self.num, self.den)

    def radians(self) -> float:
        return self.num / self.den * math.pi

    def to_json(self) -> dict:
        return {"num": self.num, "den": self.den}

    def to_scaled(self) -> ScaledValue:
        return ScaledValue(self.num, self.den)

    def __lt__(self, other: "Angle") -> bool:
        return self.num * other.den < other.num * self.den

    def __le__(self, other: "Angle") -> bool:
        return self.num * other.den <= other.num * self.den

    def __gt__(self, other: "Angle") -> bool:
        return other < self

    def __ge__(self, other: "Angle") -> bool:
        return other <= self

    def __str__(self) -> str:
        return f"{self.num}/{self.den}" if self.den != 1 else str(self.num)

    def format_pi(self) -> str:
        return _format_pi(self.num, self.den)


_FRACTION_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+))?\s*$")
_RADIAN_RE = re.compile(r"^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)\s*rad\s*$")


def angle_parse(text: str, max_denominator: int = DEFAULT_MAX_DENOMINATOR) -> Angle:
    """Parse ``"p/q"`` (meaning (p/q)·π) or ``"<decimal>rad"`` into an Angle.

    Decimal radians are snapped to the nearest rational multiple of pi with
    denominator at most ``max_denominator`` and the result carries
    ``approx=True``.  Values outside [0, pi] raise AngleRangeError;
    unparsable text raises AngleSyntaxError.
    """
    m = _FRACTION_RE.match(text)
    if m:
        num, den = int(m.group(1)), int(m.group(2) or 1)
        if den == 0:
            raise AngleSyntaxError(f"zero denominator in {text!r}")
        f = Fraction(num, den)
        if not 0 <= f <= 1:
            raise AngleRangeError(f"{text!r} is {f}·π, outside [0, π]")
        return Angle.from_fraction(f)
    m = _RADIAN_RE.match(text)
    if m:
        f = Fraction(float(m.group(1)) / math.pi).limit_denominator(max_denominator)
        if not 0 <= f <= 1:
            raise AngleRangeError(f"{text!r} is outside [0, π]")
        return Angle.from_fraction(f, approx=True)
    raise AngleSyntaxError(
        f"cannot parse angle {text!r}: expected 'p/q' (fraction of π) or '<decimal>rad'"
    )


def rational_sum(signs: Sequence[int], angles: Sequence[Angle]) -> ScaledValue:
    """Exact signed sum Σ signs[i]·angles[i], as a multiple of pi."""
    if len(signs) != len(angles):
        raise ValueError(f"{len(signs)} signs for {len(angles)} angles")
    if not angles:
        raise ValueError("empty sum")
    if any(s not in (1, -1) for s in signs):
        raise ValueError("signs must be +1 or -1")
    total = sum((a.frac if s == 1 else -a.frac) for s, a in zip(signs, angles))
    return ScaledValue.from_fraction(Fraction(total))


@dataclass(frozen=True)
class AngleInterval:
    """A closed subinterval [lo, hi] of [0, pi]."""

    lo: Angle
    hi: Angle

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"empty interval: lo={self.lo} > hi={self.hi}")

    @classmethod
    def point(cls, a: Angle) -> "AngleInterval":
        return cls(a, a)

    @classmethod
    def full(cls) -> "AngleInterval":
        return cls(Angle.zero(), Angle.pi())

    @classmethod
    def from_json(cls, obj: dict) -> "AngleInterval":
        return cls(Angle.from_json(obj["lo"]), Angle.from_json(obj["hi"]))

    @property
    def is_full(self) -> bool:
        return self.lo.num == 0 and self.hi.frac == 1

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, angle: Angle) -> bool:
        return self.lo <= angle <= self.hi

    def contains_interval(self, other: "AngleInterval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def radians(self) -> tuple[float, float]:
        return self.lo.radians(), self.hi.radians()

    def to_json(self) -> dict:
        return {"lo": self.lo.to_json(), "hi": self.hi.to_json()}

    def __str__(self) -> str:
        return f"[{self.lo.format_pi()}, {self.hi.format_pi()}]"
