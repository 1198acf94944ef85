"""The quantum cohomology ring of CP¹ and its route to the membership system.

The ring is spanned over ℝ[q] by the Schubert classes σ₁ (the point class)
and σ₂ = 1, with σ₁⋆σ₁ = q.  Products of Schubert monomials stay monomials,
so a class is just a pair (d, k) encoding q^d·σ_k.  Evaluating a word
σ_{i₁}⋆…⋆σ_{iₙ} and reading off (d, k) yields one membership inequality
over n+1 angles:

    Σ (−1)^{i_j−1} λ_j + (−1)^k λ_{n+1} ≤ 2d·π

Running over all 2ⁿ words reproduces the full membership system on n+1
angles; that equivalence is a theorem, and the test suite checks it against
the independent sign-pattern generator rather than assuming it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .angles import ScaledValue
from .membership import (
    DEFAULT_CAP,
    CapExceededError,
    InequalitySystem,
    SignedInequality,
    mask_from_signs,
)


@dataclass(frozen=True)
class QHClass:
    """A monomial q^d·σ_k with d ≥ 0 and k ∈ {1, 2} (σ₂ is the unit)."""

    d: int
    k: int

    def __post_init__(self) -> None:
        if self.d < 0:
            raise ValueError("q-power must be nonnegative")
        if self.k not in (1, 2):
            raise ValueError("Schubert index must be 1 or 2")

    @classmethod
    def from_json(cls, obj: dict) -> "QHClass":
        return cls(int(obj["d"]), int(obj["k"]))

    @property
    def degree(self) -> int:
        # q has degree 4, sigma_1 degree 2, sigma_2 degree 0
        return 4 * self.d + (2 if self.k == 1 else 0)

    def to_json(self) -> dict:
        return {"d": self.d, "k": self.k}

    def __str__(self) -> str:
        if self.d == 0:
            return f"σ{self.k}"
        q = "q" if self.d == 1 else f"q^{self.d}"
        return f"{q}·σ{self.k}"


UNIT = QHClass(0, 2)
POINT = QHClass(0, 1)


@dataclass(frozen=True)
class SchubertWord:
    """A choice i₁,…,iₙ of Schubert indices, each 1 or 2."""

    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.letters:
            raise ValueError("empty word")
        if any(i not in (1, 2) for i in self.letters):
            raise ValueError("letters must be 1 or 2")
        object.__setattr__(self, "letters", tuple(self.letters))

    def __len__(self) -> int:
        return len(self.letters)


def qh_mul(x: QHClass, y: QHClass) -> QHClass:
    """Quantum product of two monomial classes: σ₁⋆σ₁ = q, σ₂ is the unit."""
    e = (x.k == 1) + (y.k == 1)
    return QHClass(x.d + y.d + e // 2, 1 if e % 2 else 2)


def qh_word_product(word: SchubertWord) -> QHClass:
    """Evaluate σ_{i₁}⋆…⋆σ_{iₙ}; only the number of σ₁ factors matters."""
    ones = word.letters.count(1)
    return QHClass(ones // 2, 1 if ones % 2 else 2)


def qh_inequality(word: SchubertWord) -> SignedInequality:
    """The membership inequality over n+1 angles encoded by a length-n word.

    Letter 1 contributes +λ_j, letter 2 contributes −λ_j; the product
    q^d·σ_k of the word fixes the last sign ((−1)^k) and the bound 2d·π.
    """
    cls = qh_word_product(word)
    signs = tuple(1 if i == 1 else -1 for i in word.letters)
    signs += (-1 if cls.k == 1 else 1,)
    return SignedInequality(signs, ScaledValue(2 * cls.d))


def qh_system(n: int, cap: int = DEFAULT_CAP) -> InequalitySystem:
    """All 2ⁿ word inequalities, canonicalized into a system over n+1 angles."""
    if n < 1:
        raise ValueError("need a word of length at least one")
    if n > cap:
        raise CapExceededError(f"2^{n} words exceed the cap of {cap}")
    ineqs = sorted(
        (qh_inequality(SchubertWord(w)) for w in product((1, 2), repeat=n)),
        key=lambda ineq: mask_from_signs(ineq.signs),
    )
    assert len({i.signs for i in ineqs}) == 1 << n, "words must map to distinct patterns"
    return InequalitySystem(n + 1, tuple(ineqs))
