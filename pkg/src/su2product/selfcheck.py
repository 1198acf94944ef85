"""Reduced-scale cross-validation of every route against every other.

Each check exercises one of the redundancies the package is built around:
system vs interval membership, direct vs derived surjectivity, word-product
vs sign-pattern generators, and exact predictions vs sampled matrices.
The full-scale versions live in the test suite; this runs in a couple of
seconds and is exposed as the ``selfcheck`` CLI verb.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import product

from .angles import Angle
from .membership import (
    contains_identity,
    contains_identity_interval,
    membership_system,
    reachable,
)
from .qh import qh_system
from .su2 import class_angle, empirical_reachable, haar_sample, su2_mul
from .surjectivity import (
    derive_surjectivity_from_membership,
    is_surjective,
    is_surjective_interval,
    surjectivity_system,
)

import numpy as np


def _grid(step_den: int) -> list[Angle]:
    return [Angle(k, step_den) for k in range(step_den + 1)]


def _check_system_sizes() -> bool:
    return all(len(membership_system(n)) == 1 << (n - 1) for n in range(1, 11))


def _check_membership_routes() -> bool:
    grid = _grid(4)
    for n in range(1, 5):
        for tup in product(grid, repeat=n):
            if bool(contains_identity(tup)) != contains_identity_interval(tup):
                return False
    return True


def _check_triple_base_case() -> bool:
    grid = _grid(6)
    for tup in product(grid, repeat=3):
        a, b, c = (t.frac for t in tup)
        direct = abs(a - b) <= c <= min(a + b, 2 - a - b)
        if bool(contains_identity(tup)) != direct:
            return False
    return True


def _check_surjectivity_routes() -> bool:
    grid = _grid(4)
    for n in range(1, 5):
        for tup in product(grid, repeat=n):
            if bool(is_surjective(tup)) != is_surjective_interval(tup):
                return False
    return True


def _check_derivation() -> bool:
    return all(
        set(derive_surjectivity_from_membership(n)) == set(surjectivity_system(n))
        for n in range(1, 9)
    )


def _check_qh_route() -> bool:
    return all(
        qh_system(n).as_canonical_set() == membership_system(n + 1).as_canonical_set()
        for n in range(1, 9)
    )


def _check_pascal_counting() -> bool:
    for n in range(1, 17):
        for j in range((n + 1) // 2):
            lhs = math.comb(n + 1, 2 * j + 1) + math.comb(n + 1, n - 2 * j)
            rhs = 2 * (math.comb(n, 2 * j + 1) + math.comb(n, 2 * j))
            if lhs != rhs:
                return False
    return True


def _check_monte_carlo() -> bool:
    report = empirical_reachable([Angle(3, 4), Angle(1, 4)], 20_000, seed=7)
    return (
        report.containment_ok
        and report.endpoint_gap_lo < 0.05
        and report.endpoint_gap_hi < 0.05
    )


def _check_numeric_invariance() -> bool:
    rng = np.random.default_rng(11)
    for _ in range(200):
        g, k = haar_sample(rng), haar_sample(rng)
        conj = su2_mul(su2_mul(k, g), k.inverse())
        if abs(class_angle(conj) - class_angle(g)) > 1e-12:
            return False
        if abs(class_angle(g.inverse()) - class_angle(g)) > 1e-12:
            return False
    return True


def _check_full_interval_witness() -> bool:
    half = Angle(1, 2)
    return reachable([half, half]).is_full and not reachable(
        [Angle(3, 4), Angle(1, 4)]
    ).is_full


CHECKS = [
    ("membership system sizes 2^(N-1)", _check_system_sizes),
    ("system route == interval route (membership)", _check_membership_routes),
    ("triple base case matches two-sided bound", _check_triple_base_case),
    ("system route == interval route (surjectivity)", _check_surjectivity_routes),
    ("derived two-sided system == direct generator", _check_derivation),
    ("word-product system == membership system", _check_qh_route),
    ("replacement counting identity", _check_pascal_counting),
    ("Monte Carlo containment (reduced scale)", _check_monte_carlo),
    ("class angle conjugation/inverse invariance", _check_numeric_invariance),
    ("full-interval witness (π/2, π/2)", _check_full_interval_witness),
]


def run_selfcheck() -> list[tuple[str, bool]]:
    return [(name, bool(fn())) for name, fn in CHECKS]
