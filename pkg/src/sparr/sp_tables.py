"""Rational Betti tables of symmetric products of surfaces and wedges of circles.

Rationally, H_*(SP^j(M_g)) has basis e_I * gamma^q (I a subset of the 2g
odd generators, q >= 0) with |I| + q <= j, in degree |I| + 2q.  For a wedge
of m circles (and so for an m = 2g + k - 1 punctured surface) the basis is
e_I with |I| <= j, in degree |I|.  Everything here is a closed form in
binomial coefficients; :func:`basis` enumerates the same classes one by one
so the closed forms can be checked against a count.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator

from .errors import ValidationError
from .simplicial import BettiTable

CLOSED = "closed_surface"
PUNCTURED = "punctured_surface"
WEDGE = "wedge_of_circles"
KINDS = (CLOSED, PUNCTURED, WEDGE)


def binom(a: int, b: int) -> int:
    """C(a, b), zero whenever b < 0, b > a or a < 0."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class SpaceModel:
    kind: str
    genus: int = 0
    punctures: int = 0
    circles: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValidationError(f"unknown space kind {self.kind!r}")
        if min(self.genus, self.punctures, self.circles) < 0:
            raise ValidationError(f"negative parameter in {self}")
        if self.kind == PUNCTURED and self.punctures < 1:
            raise ValidationError("punctured_surface needs at least one puncture")

    @classmethod
    def closed_surface(cls, genus: int) -> "SpaceModel":
        return cls(CLOSED, genus=genus)

    @classmethod
    def punctured_surface(cls, genus: int, punctures: int) -> "SpaceModel":
        return cls(PUNCTURED, genus=genus, punctures=punctures)

    @classmethod
    def wedge_of_circles(cls, circles: int) -> "SpaceModel":
        return cls(WEDGE, circles=circles)

    @property
    def is_closed(self) -> bool:
        return self.kind == CLOSED

    @property
    def odd_generators(self) -> int:
        """Number of degree-one generators: 2g, or the circle count."""
        if self.kind == CLOSED:
            return 2 * self.genus
        if self.kind == PUNCTURED:
            return 2 * self.genus + self.punctures - 1
        return self.circles

    @property
    def euler_characteristic(self) -> int:
        if self.kind == CLOSED:
            return 2 - 2 * self.genus
        return 1 - self.odd_generators

    def describe(self) -> str:
        if self.kind == CLOSED:
            return f"M_{self.genus}"
        if self.kind == PUNCTURED:
            return f"M_{self.genus},{self.punctures}"
        return f"wedge of {self.circles} circles"

    def to_json(self) -> dict:
        if self.kind == CLOSED:
            return {"kind": CLOSED, "genus": self.genus}
        if self.kind == PUNCTURED:
            return {"kind": PUNCTURED, "genus": self.genus, "punctures": self.punctures}
        return {"kind": WEDGE, "circles": self.circles}


@dataclass(frozen=True)
class BasisElement:
    """One additive generator e_I * gamma^q."""

    I: tuple[int, ...]
    q: int = 0

    @property
    def degree(self) -> int:
        return len(self.I) + 2 * self.q

    @property
    def filtration(self) -> int:
        return len(self.I) + self.q


def basis(space: SpaceModel, j: int) -> Iterator[BasisElement]:
    """Enumerate the basis of H_*(SP^j(space); Q): all classes of filtration <= j."""
    gens = space.odd_generators
    max_q = j if space.is_closed else 0
    for q in range(max_q + 1):
        for size in range(min(gens, j - q) + 1):
            for I in combinations(range(gens), size):
                yield BasisElement(I, q)


def sp_betti(space: SpaceModel, j: int) -> BettiTable:
    """Betti table of SP^j(space)."""
    if j < 0:
        return BettiTable()
    gens = space.odd_generators
    if space.is_closed:
        return BettiTable({
            d: sum(binom(gens, d - 2 * q) for q in range(max(0, d - j), d // 2 + 1))
            for d in range(2 * j + 1)
        })
    return BettiTable({d: binom(gens, d) for d in range(j + 1)})


def sp_relative_betti(space: SpaceModel, j: int) -> BettiTable:
    """Ranks of H_*(SP^j, SP^{j-1}) with SP^{-1} empty; the Steenrod summand of filtration j."""
    if j < 0:
        return BettiTable()
    gens = space.odd_generators
    if space.is_closed:
        return BettiTable({d: binom(gens, 2 * j - d) for d in range(j, 2 * j + 1)})
    return BettiTable({j: binom(gens, j)})


def sp_euler(space: SpaceModel, j: int) -> int:
    return sp_betti(space, j).euler_characteristic()


def ker_im_beta(g: int, k: int, n: int, d: int) -> tuple[int, int]:
    """Kernel and image ranks of H_d(SP^n(M_{g,k})) -> H_d(SP^n(M_g))."""
    _check_gkn(g, k, n)
    if d > n or d < 0:
        return 0, 0
    return binom(2 * g + k - 1, d) - binom(2 * g, d), binom(2 * g, d)


def im_cap(g: int, k: int, n: int, p: int) -> int:
    """Rank of the intersection of the images of H_p(F_n) and H_p(SP^n(M_{g,k})) in H_p(SP^n(M_g)).

    F_n is the union of the k subspaces x_i + SP^{n-1}(M_g).
    """
    _check_gkn(g, k, n)
    return binom(2 * g, p) if p <= n - 1 else 0


def phi(g: int, k: int, n: int, d: int) -> int:
    """Rank of H_d(SP^n(M_g), F_n), i.e. of H^{2n-d}(SP^n(M_{g,k})) by duality."""
    _check_gkn(g, k, n)
    return binom(2 * g + k - 1, 2 * n - d) if n <= d else 0


def _check_gkn(g: int, k: int, n: int) -> None:
    if g < 0:
        raise ValidationError(f"genus must be >= 0, got {g}")
    if k < 1:
        raise ValidationError(f"need at least one puncture, got k={k}")
    if n < 1:
        raise ValidationError(f"symmetric power must be >= 1, got n={n}")
