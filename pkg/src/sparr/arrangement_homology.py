"""Rational homology of the union and complement of an arrangement in SP^n(X).

The union is the homotopy colimit of the simple diagram I -> SP^{mu(I)}(X)
over the intersection poset, and its homology splits along the Steenrod
filtration: one summand H_*((SP^j, SP^{j-1}) x Delta(P_j)) for each j, where
P_j is the ideal of elements with mu >= j.  Over Q every summand is a
Kunneth product, so Betti numbers reduce to the relative Steenrod ranks and
the Betti numbers of the order complexes Delta(P_j).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .divisor_poset import Arrangement, IntersectionPoset, ideal, intersection_poset, order_complex
from .errors import ConsistencyError, UnsupportedSpaceError, ValidationError
from .simplicial import BettiTable, betti, reduced_betti
from .sp_tables import SpaceModel, binom, sp_betti, sp_relative_betti


@dataclass(frozen=True)
class DecompositionTerm:
    """Summand rel_p(j) * b_q(Delta(P_j)) contributing to H_{p+q} of the union."""

    j: int
    p: int
    q: int
    multiplicity: int

    @property
    def total_degree(self) -> int:
        return self.p + self.q


@dataclass(frozen=True)
class ComplementTable:
    n: int
    A: BettiTable  # kernel of H_d(union) -> H_d(SP^n)
    B: BettiTable  # cokernel of the same map
    cohomology: BettiTable


@lru_cache(maxsize=4096)
def _poset_betti(P: IntersectionPoset) -> BettiTable:
    return betti(order_complex(P))


@lru_cache(maxsize=4096)
def _poset_reduced_betti(P: IntersectionPoset) -> BettiTable:
    return reduced_betti(order_complex(P))


def filtration_bettis(P: IntersectionPoset) -> list[BettiTable]:
    """Betti tables of Delta(P_j) for j = 0 .. max mu."""
    return [_poset_betti(ideal(P, j)) for j in range(P.max_mu + 1)]


def union_decomposition(arr: Arrangement) -> list[DecompositionTerm]:
    P = intersection_poset(arr)
    terms = []
    for j, b in enumerate(filtration_bettis(P)):
        rel = sp_relative_betti(arr.space, j)
        for p, rp in rel.items():
            for q, bq in b.items():
                terms.append(DecompositionTerm(j, p, q, rp * bq))
    return sorted(terms, key=lambda t: (t.j, t.p, t.q))


def union_betti_from_terms(terms: list[DecompositionTerm]) -> BettiTable:
    out: dict[int, int] = {}
    for t in terms:
        out[t.total_degree] = out.get(t.total_degree, 0) + t.multiplicity
    return BettiTable(out)


def union_betti_two_part(arr: Arrangement) -> BettiTable:
    """The form SP^m(X) x Delta(P)  plus  sum_{j=m+1}^{M} (SP^j, SP^{j-1}) x Delta(P_j)."""
    P = intersection_poset(arr)
    if P.is_empty():
        return BettiTable()
    m, M = P.min_mu, P.max_mu
    total = sp_betti(arr.space, m).tensor(_poset_betti(P))
    for j in range(m + 1, M + 1):
        total = total + sp_relative_betti(arr.space, j).tensor(_poset_betti(ideal(P, j)))
    return total


def union_betti(arr: Arrangement) -> BettiTable:
    """Betti numbers of the union; both forms of the decomposition must agree."""
    filtered = union_betti_from_terms(union_decomposition(arr))
    two_part = union_betti_two_part(arr)
    if filtered != two_part:
        raise ConsistencyError(f"decomposition forms disagree: {filtered} vs {two_part}")
    return filtered


def skeleton_betti(k: int, p: int) -> BettiTable:
    """Betti table of the p-skeleton of a simplex on k vertices (a wedge of p-spheres)."""
    if p < 0 or k < 1:
        return BettiTable()
    p = min(p, k - 1)
    return BettiTable({0: 1}) + BettiTable({p: binom(k - 1, p + 1)})


def points_case_betti(space: SpaceModel, n: int, k: int) -> BettiTable:
    """Union Betti numbers of {x_i + SP^{n-1}(X)} for k distinct points, in closed form."""
    if n < 1 or k < 1:
        raise ValidationError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
    m = min(n, k)
    total = sp_betti(space, n - m).tensor(skeleton_betti(k, m - 1))
    for p in range(m - 1):
        total = total + sp_relative_betti(space, n - p - 1).tensor(skeleton_betti(k, p))
    return total


def complement_tables(arr: Arrangement) -> ComplementTable:
    """Kernel/cokernel ranks of H_*(union) -> H_*(SP^n(M_g)) and the complement's cohomology.

    Duality on the closed 2n-manifold SP^n(M_g) gives
    H^t(complement) = H_{2n-t}(SP^n, union) = A_{2n-t-1} + B_{2n-t}.
    """
    if not arr.space.is_closed:
        raise UnsupportedSpaceError(
            f"complement needs Poincare duality on SP^n of a closed surface, got {arr.space.describe()}")
    P = intersection_poset(arr)
    if P.is_empty():
        raise ValidationError("empty arrangement: the complement is all of SP^n; use sp_betti")
    n, M = arr.n, P.max_mu
    A: dict[int, int] = {}
    for j in range(M + 1):
        Pj = ideal(P, j)
        rel = sp_relative_betti(arr.space, j)
        b = _poset_betti(Pj)
        omega = _poset_reduced_betti(Pj)[0]
        for p, rp in rel.items():
            for q, bq in b.items():
                if q >= 1:
                    A[p + q] = A.get(p + q, 0) + rp * bq
            if omega:
                A[p] = A.get(p, 0) + rp * omega
    B = BettiTable()
    for j in range(M + 1, n + 1):
        B = B + sp_relative_betti(arr.space, j)
    A_table = BettiTable(A)
    coh = BettiTable({t: A_table[2 * n - t - 1] + B[2 * n - t] for t in range(2 * n + 1)})
    return ComplementTable(n, A_table, B, coh)
