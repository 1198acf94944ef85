"""Floating-point SU(2) arithmetic and the seeded Monte Carlo oracle.

Elements are stored as the first column (a, b) of the matrix
[[a, −conj(b)], [b, conj(a)]], i.e. as unit quaternions.  Haar sampling
draws a 4-dimensional standard Gaussian and normalizes it; class elements
are built by conjugating diag(e^{iλ}, e^{−iλ}) with a Haar-random element.

``empirical_reachable`` samples products of class elements and compares the
observed class-angle range against the exact ``reachable`` interval.  It is
deliberately redundant with the exact predicates: the exact code validates
the sampler's envelope and the sampler probes the exact code's endpoints.

Sampling is chunked; every chunk gets its own RNG stream spawned from the
master seed, and chunks are merged by min/max, so the result is independent
of evaluation order and a fixed seed reproduces the identical report.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

import numpy as np

from .angles import Angle, AngleInterval, AngleRangeError, DEFAULT_MAX_DENOMINATOR
from .membership import reachable

CONTAINMENT_SLACK = 1e-9
_CHUNK = 250_000


@dataclass(frozen=True)
class SU2Element:
    """An SU(2) matrix [[a, −conj(b)], [b, conj(a)]]; renormalized on build."""

    a: complex
    b: complex

    def __post_init__(self) -> None:
        norm = math.sqrt(abs(self.a) ** 2 + abs(self.b) ** 2)
        if norm < 1e-6:
            raise ValueError("cannot renormalize a near-zero pair")
        object.__setattr__(self, "a", complex(self.a) / norm)
        object.__setattr__(self, "b", complex(self.b) / norm)

    @classmethod
    def identity(cls) -> "SU2Element":
        return cls(1.0 + 0.0j, 0.0j)

    @classmethod
    def diagonal(cls, lam: float) -> "SU2Element":
        return cls(complex(math.cos(lam), math.sin(lam)), 0.0j)

    @property
    def trace(self) -> float:
        return 2.0 * self.a.real

    def inverse(self) -> "SU2Element":
        return SU2Element(self.a.conjugate(), -self.b)

    def to_matrix(self) -> np.ndarray:
        return np.array(
            [[self.a, -self.b.conjugate()], [self.b, self.a.conjugate()]],
            dtype=complex,
        )


def su2_mul(g: SU2Element, h: SU2Element) -> SU2Element:
    """Group product; the constructor renormalizes, so drift stays below 1e-12."""
    return SU2Element(
        g.a * h.a - g.b.conjugate() * h.b,
        g.b * h.a + g.a.conjugate() * h.b,
    )


def class_angle(g: SU2Element) -> float:
    """The unique λ ∈ [0, π] with g ∈ C(λ): trace(g) = 2·cos(λ)."""
    return math.acos(min(1.0, max(-1.0, g.a.real)))


def haar_sample(rng: np.random.Generator) -> SU2Element:
    """A Haar-uniform element: a normalized 4-dim Gaussian read as (a, b)."""
    while True:
        v = rng.standard_normal(4)
        if v @ v > 1e-12:
            break
    return SU2Element(complex(v[0], v[1]), complex(v[2], v[3]))


def class_sample(lam: float, rng: np.random.Generator) -> SU2Element:
    """A uniform element of C(λ): k·diag(e^{iλ}, e^{−iλ})·k⁻¹ with k Haar."""
    if not 0.0 <= lam <= math.pi:
        raise AngleRangeError(f"{lam} rad is outside [0, π]")
    k = haar_sample(rng)
    return su2_mul(su2_mul(k, SU2Element.diagonal(lam)), k.inverse())


@dataclass(frozen=True)
class SampleReport:
    """Observed class-angle range of sampled products vs the exact prediction."""

    n_samples: int
    empirical_lo: float
    empirical_hi: float
    predicted: AngleInterval
    containment_ok: bool
    endpoint_gap_lo: float
    endpoint_gap_hi: float
    seed: int

    def to_json(self) -> dict:
        plo, phi = self.predicted.radians()
        return {
            "n_samples": self.n_samples,
            "empirical_lo": self.empirical_lo,
            "empirical_hi": self.empirical_hi,
            "predicted_lo": plo,
            "predicted_hi": phi,
            "containment_ok": self.containment_ok,
            "endpoint_gap_lo": self.endpoint_gap_lo,
            "endpoint_gap_hi": self.endpoint_gap_hi,
            "seed": self.seed,
        }


def _coerce_angle(x: Union[Angle, float], max_denominator: int) -> Angle:
    if isinstance(x, Angle):
        return x
    f = Fraction(float(x) / math.pi).limit_denominator(max_denominator)
    if not 0 <= f <= 1:
        raise AngleRangeError(f"{x} rad is outside [0, π]")
    return Angle.from_fraction(f, approx=True)


def _haar_batch(rng: np.random.Generator, m: int) -> tuple[np.ndarray, np.ndarray]:
    v = rng.standard_normal((m, 4))
    v /= np.linalg.norm(v, axis=1, keepdims=True)
    return v[:, 0] + 1j * v[:, 1], v[:, 2] + 1j * v[:, 3]


def _class_batch(lam: float, rng: np.random.Generator, m: int) -> tuple[np.ndarray, np.ndarray]:
    ka, kb = _haar_batch(rng, m)
    e = complex(math.cos(lam), math.sin(lam))
    a = (ka * e) * np.conj(ka) + np.conj(kb * e) * kb
    b = (kb * e) * np.conj(ka) - np.conj(ka * e) * kb
    return a, b


def _mul_batch(a1, b1, a2, b2) -> tuple[np.ndarray, np.ndarray]:
    a = a1 * a2 - np.conj(b1) * b2
    b = b1 * a2 + np.conj(a1) * b2
    norm = np.sqrt(np.abs(a) ** 2 + np.abs(b) ** 2)
    return a / norm, b / norm


def empirical_reachable(
    angles: Sequence[Union[Angle, float]],
    n_samples: int,
    seed: int,
    max_denominator: int = DEFAULT_MAX_DENOMINATOR,
) -> SampleReport:
    """Sample products g₁···gₙ with gᵢ ∈ C(λᵢ) and report the angle range.

    Angles may be exact ``Angle`` values or float radians; floats are snapped
    to rationals (bounded denominator) so the predicted interval is exact and
    the sampler draws from the very same snapped classes.  Containment allows
    a 1e-9 slack for accumulated rounding.
    """
    exact = [_coerce_angle(x, max_denominator) for x in angles]
    if not exact:
        raise ValueError("need at least one angle")
    if n_samples < 1:
        raise ValueError("need at least one sample")
    predicted = reachable(exact)
    lams = [a.radians() for a in exact]

    n_chunks = (n_samples + _CHUNK - 1) // _CHUNK
    children = np.random.SeedSequence(seed).spawn(n_chunks)
    emp_lo, emp_hi = math.inf, -math.inf
    left = n_samples
    for child in children:
        m = min(_CHUNK, left)
        left -= m
        rng = np.random.default_rng(child)
        a, b = _class_batch(lams[0], rng, m)
        for lam in lams[1:]:
            a2, b2 = _class_batch(lam, rng, m)
            a, b = _mul_batch(a, b, a2, b2)
        theta = np.arccos(np.clip(a.real, -1.0, 1.0))
        emp_lo = min(emp_lo, float(theta.min()))
        emp_hi = max(emp_hi, float(theta.max()))

    plo, phi = predicted.radians()
    gap_lo = emp_lo - plo
    gap_hi = phi - emp_hi
    ok = gap_lo >= -CONTAINMENT_SLACK and gap_hi >= -CONTAINMENT_SLACK
    return SampleReport(
        n_samples=n_samples,
        empirical_lo=emp_lo,
        empirical_hi=emp_hi,
        predicted=predicted,
        containment_ok=ok,
        endpoint_gap_lo=gap_lo,
        endpoint_gap_hi=gap_hi,
        seed=seed,
    )
