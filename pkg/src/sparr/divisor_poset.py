"""Divisors over a labelled point set and intersection posets of arrangements.

A subspace D + SP^{n-|D|}(X) of SP^n(X) is the set of degree-n divisors that
dominate D, so intersecting such subspaces amounts to taking pointwise maxima
of multiplicity vectors.  The intersection poset is therefore the join
closure of the generators, truncated at order n.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from .errors import DimensionError, ValidationError
from .simplicial import SimplicialComplex
from .sp_tables import SpaceModel


@dataclass(frozen=True)
class PointSet:
    labels: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(str(x) for x in self.labels))
        if not self.labels:
            raise ValidationError("a point set needs at least one label")
        if len(set(self.labels)) != len(self.labels):
            raise ValidationError(f"point labels must be distinct: {self.labels}")

    @classmethod
    def standard(cls, k: int) -> "PointSet":
        return cls(tuple(f"x{i}" for i in range(1, k + 1)))

    def __len__(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class Divisor:
    """Effective divisor sum(m_i * x_i) stored as its multiplicity vector."""

    multiplicities: tuple[int, ...]

    def __post_init__(self):
        mults = tuple(int(m) for m in self.multiplicities)
        if any(m < 0 for m in mults):
            raise ValidationError(f"negative multiplicity in {mults}")
        object.__setattr__(self, "multiplicities", mults)

    @classmethod
    def zero(cls, k: int) -> "Divisor":
        return cls((0,) * k)

    @classmethod
    def point(cls, k: int, i: int, multiplicity: int = 1) -> "Divisor":
        mults = [0] * k
        mults[i] = multiplicity
        return cls(tuple(mults))

    @property
    def order(self) -> int:
        return sum(self.multiplicities)

    def __len__(self) -> int:
        return len(self.multiplicities)

    def __or__(self, other: "Divisor") -> "Divisor":
        return divisor_join(self, other)

    def format(self, points: PointSet | None = None) -> str:
        labels = points.labels if points else tuple(f"x{i + 1}" for i in range(len(self)))
        terms = [(lab if m == 1 else f"{m}{lab}") for lab, m in zip(labels, self.multiplicities) if m]
        return " + ".join(terms) or "0"


def divisor_order(D: Divisor) -> int:
    return D.order


def _same_support(D1: Divisor, D2: Divisor) -> None:
    if len(D1) != len(D2):
        raise DimensionError(f"divisors over {len(D1)} and {len(D2)} points")


def divisor_leq(D1: Divisor, D2: Divisor) -> bool:
    _same_support(D1, D2)
    return all(a <= b for a, b in zip(D1.multiplicities, D2.multiplicities))


def divisor_join(D1: Divisor, D2: Divisor) -> Divisor:
    """Least upper bound: pointwise maximum."""
    _same_support(D1, D2)
    return Divisor(tuple(max(a, b) for a, b in zip(D1.multiplicities, D2.multiplicities)))


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % f for f in range(2, math.isqrt(p) + 1))


def first_primes(k: int) -> tuple[int, ...]:
    out: list[int] = []
    candidate = 2
    while len(out) < k:
        if _is_prime(candidate):
            out.append(candidate)
        candidate += 1
    return tuple(out)


def encode_integer(D: Divisor, primes: Sequence[int] | None = None) -> int:
    """Encode D as prod(p_i ** m_i); joins become lcms and <= becomes divisibility."""
    if primes is None:
        primes = first_primes(len(D))
    primes = tuple(primes)
    if len(primes) != len(D):
        raise ValidationError(f"need {len(D)} primes, got {len(primes)}")
    if len(set(primes)) != len(primes):
        raise ValidationError(f"primes must be distinct: {primes}")
    bad = [p for p in primes if not _is_prime(p)]
    if bad:
        raise ValidationError(f"not prime: {bad}")
    return math.prod(p**m for p, m in zip(primes, D.multiplicities))


@dataclass(frozen=True)
class Arrangement:
    """Subspaces D_i + SP^{n-|D_i|}(X) of SP^n(X).

    Repeated generators are dropped (first occurrence wins); the union does
    not see them.
    """

    space: SpaceModel
    n: int
    points: PointSet
    generators: tuple[Divisor, ...] = ()
    duplicates: tuple[int, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError(f"n must be positive, got {self.n}")
        seen: dict[Divisor, int] = {}
        dropped = []
        for i, D in enumerate(self.generators):
            D = D if isinstance(D, Divisor) else Divisor(tuple(D))
            if len(D) != len(self.points):
                raise ValidationError(
                    f"generator {i} has {len(D)} multiplicities for {len(self.points)} points")
            if not 1 <= D.order <= self.n:
                raise ValidationError(f"generator {i} has order {D.order}, outside [1, {self.n}]")
            if D in seen:
                dropped.append(i)
            else:
                seen[D] = i
        object.__setattr__(self, "generators", tuple(seen))
        object.__setattr__(self, "duplicates", tuple(dropped))

    @classmethod
    def from_vectors(cls, space: SpaceModel, n: int, vectors: Iterable[Sequence[int]],
                     points: PointSet | Sequence[str] | None = None) -> "Arrangement":
        vectors = [tuple(v) for v in vectors]
        if points is None:
            k = len(vectors[0]) if vectors else 1
            points = PointSet.standard(k)
        elif not isinstance(points, PointSet):
            points = PointSet(tuple(points))
        return cls(space, n, points, tuple(Divisor(v) for v in vectors))

    @classmethod
    def distinct_points(cls, space: SpaceModel, n: int, k: int) -> "Arrangement":
        """The arrangement {x_i + SP^{n-1}(X)} for k distinct points."""
        return cls(space, n, PointSet.standard(k), tuple(Divisor.point(k, i) for i in range(k)))


@dataclass(frozen=True)
class IntersectionPoset:
    """Join-closed family of divisors of order <= n, ordered by divisibility.

    ``elements`` is sorted by (order, multiplicities), which is a linear
    extension of the partial order.
    """

    n: int
    elements: tuple[Divisor, ...]

    def mu(self, I: Divisor) -> int:
        return self.n - I.order

    @cached_property
    def index(self) -> dict[Divisor, int]:
        return {e: i for i, e in enumerate(self.elements)}

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, D: object) -> bool:
        return D in self.index

    def is_empty(self) -> bool:
        return not self.elements

    def leq(self, a: Divisor, b: Divisor) -> bool:
        return divisor_leq(a, b)

    @property
    def min_mu(self) -> int:
        return min((self.mu(e) for e in self.elements), default=0)

    @property
    def max_mu(self) -> int:
        return max((self.mu(e) for e in self.elements), default=-1)

    def ideal(self, j: int) -> "IntersectionPoset":
        return ideal(self, j)

    def upper_sets(self) -> list[list[int]]:
        """For each element position, the positions of strictly greater elements."""
        els = self.elements
        return [[b for b in range(a + 1, len(els)) if els[a] != els[b] and divisor_leq(els[a], els[b])]
                for a in range(len(els))]

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram edges (a, b) with a covered by b, as element positions."""
        up = self.upper_sets()
        edges = []
        for a, ups in enumerate(up):
            ups_set = set(ups)
            for b in ups:
                if not any(b in up[c] for c in ups_set if c != b):
                    edges.append((a, b))
        return edges


def intersection_poset(arr: Arrangement) -> IntersectionPoset:
    """Close the generators under pairwise join, dropping joins of order > n."""
    found = set(arr.generators)
    frontier = list(found)
    gens = arr.generators
    while frontier:
        fresh = []
        for a in frontier:
            for g in gens:
                j = divisor_join(a, g)
                if j.order <= arr.n and j not in found:
                    found.add(j)
                    fresh.append(j)
        frontier = fresh
    elements = tuple(sorted(found, key=lambda d: (d.order, d.multiplicities)))
    return IntersectionPoset(arr.n, elements)


def ideal(P: IntersectionPoset, j: int) -> IntersectionPoset:
    """The down-set {I : mu(I) >= j} = {I : |I| <= n - j}."""
    return IntersectionPoset(P.n, tuple(e for e in P.elements if P.mu(e) >= j))


def order_complex(P: IntersectionPoset) -> SimplicialComplex:
    """Simplicial complex of chains I_0 < ... < I_d, with the elements of P as vertices."""
    cover_up: list[list[int]] = [[] for _ in P.elements]
    has_lower = [False] * len(P)
    for a, b in P.covers():
        cover_up[a].append(b)
        has_lower[b] = True
    chains: list[tuple[int, ...]] = []
    stack = [(a,) for a in range(len(P)) if not has_lower[a]]
    while stack:
        chain = stack.pop()
        nxt = cover_up[chain[-1]]
        if not nxt:
            chains.append(chain)
        stack.extend(chain + (b,) for b in nxt)
    els = P.elements
    return SimplicialComplex(els, ([els[i] for i in c] for c in chains))
