"""Independent verifiers.

None of these touch the code path they check: inclusion-exclusion never
builds an order complex, Mayer-Vietoris never consults the filtration
decomposition, and the kernel-sum check intersects images through an
explicit null space rather than a rank formula.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any

from .divisor_poset import Arrangement, Divisor, PointSet, divisor_join
from .errors import DimensionError, ValidationError
from .simplicial import BettiTable, RationalMatrix
from .sp_tables import SpaceModel, sp_betti, sp_euler, sp_relative_betti

MAX_GENERATORS = 16


@dataclass(frozen=True)
class VerificationReport:
    check: str
    inputs: dict[str, Any]
    expected: Any
    actual: Any
    passed: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "passed", self.expected == self.actual)

    def to_json(self) -> dict[str, Any]:
        return {
            "check": self.check,
            "inputs": self.inputs,
            "expected": _jsonable(self.expected),
            "actual": _jsonable(self.actual),
            "pass": self.passed,
        }


def _jsonable(value):
    if isinstance(value, BettiTable):
        return {str(d): r for d, r in value.items()}
    if isinstance(value, tuple):
        return list(value)
    return value


def euler_inclusion_exclusion(arr: Arrangement) -> int:
    """Euler characteristic of the union by inclusion-exclusion over generator subsets."""
    gens = arr.generators
    if len(gens) > MAX_GENERATORS:
        raise ValidationError(f"{len(gens)} generators exceeds the 2^{MAX_GENERATORS} enumeration cap")
    total = 0
    for size in range(1, len(gens) + 1):
        sign = 1 if size % 2 else -1
        for subset in combinations(gens, size):
            join = subset[0]
            for D in subset[1:]:
                join = divisor_join(join, D)
            if join.order <= arr.n:
                total += sign * sp_euler(arr.space, arr.n - join.order)
    return total


def mayer_vietoris_pair_betti(arr: Arrangement) -> BettiTable:
    """b(F1 u F2) = b(F1) + b(F2) - b(F1 n F2); exact because H(F1 n F2) injects into each side."""
    if len(arr.generators) != 2:
        raise ValidationError(f"Mayer-Vietoris oracle needs exactly 2 generators, got {len(arr.generators)}")
    D1, D2 = arr.generators
    total = sp_betti(arr.space, arr.n - D1.order) + sp_betti(arr.space, arr.n - D2.order)
    join = divisor_join(D1, D2)
    if join.order <= arr.n:
        total = total - sp_betti(arr.space, arr.n - join.order)
    return total


def _image_intersection_dim(A: RationalMatrix, B: RationalMatrix) -> int:
    # (x, y) in Ker[A|B] gives A x = -B y, a vector in both images, and every such vector arises.
    null = A.hstack(B).nullspace()
    if not null:
        return 0
    xs = [vec[: A.cols] for vec in null]
    X = RationalMatrix.from_rows([[v[i] for v in xs] for i in range(A.cols)]) if A.cols else None
    if X is None:
        return 0
    return (A @ X).rank()


def kernel_sum_identity_check(A: RationalMatrix, B: RationalMatrix) -> VerificationReport:
    """dim Ker(a + b) = dim Ker a + dim Ker b + dim(Im a n Im b) for a: U -> W, b: V -> W."""
    if A.rows != B.rows:
        raise DimensionError(f"codomains differ: {A.rows} vs {B.rows} rows")
    ker_sum = len(A.hstack(B).nullspace())
    ker_a = len(A.nullspace())
    ker_b = len(B.nullspace())
    cap = _image_intersection_dim(A, B)
    return VerificationReport(
        "kernel_sum_identity",
        {"shape_a": list(A.shape), "shape_b": list(B.shape)},
        expected=ker_sum,
        actual=ker_a + ker_b + cap,
    )


def steenrod_sum_check(space: SpaceModel, n: int) -> VerificationReport:
    """Relative Steenrod pieces for j = 0..n add up to the Betti table of SP^n."""
    total = BettiTable()
    for j in range(n + 1):
        total = total + sp_relative_betti(space, j)
    expected = sp_betti(space, n)
    top = max(2 * n, 0)
    return VerificationReport(
        "steenrod_sum",
        {"space": space.to_json(), "n": n},
        expected=expected.as_tuple(top + 1),
        actual=total.as_tuple(top + 1),
    )


def euler_generating_coefficient(chi: int, j: int) -> int:
    """Coefficient of t^j in (1 - t)^(-chi), for any integer chi."""
    if j < 0:
        return 0
    # generalised binomial: (-1)^j * C(-chi, j) = prod_{i<j} (chi + i) / j!
    num, den = 1, 1
    for i in range(j):
        num *= chi + i
        den *= i + 1
    return num // den


def random_space(rng: random.Random, max_genus: int = 2, max_circles: int = 4) -> SpaceModel:
    kind = rng.choice(("closed", "punctured", "wedge"))
    if kind == "closed":
        return SpaceModel.closed_surface(rng.randint(0, max_genus))
    if kind == "punctured":
        return SpaceModel.punctured_surface(rng.randint(0, max_genus), rng.randint(1, 3))
    return SpaceModel.wedge_of_circles(rng.randint(0, max_circles))


def random_arrangement(rng: random.Random, *, max_generators: int = 4, max_points: int = 3,
                       max_multiplicity: int = 2, max_n: int = 5,
                       space: SpaceModel | None = None) -> Arrangement:
    """Random arrangement: every generator has order in [1, n]."""
    k = rng.randint(1, max_points)
    n = rng.randint(1, max_n)
    r = rng.randint(1, max_generators)
    gens = []
    while len(gens) < r:
        mults = tuple(rng.randint(0, max_multiplicity) for _ in range(k))
        if 1 <= sum(mults) <= n:
            gens.append(Divisor(mults))
    return Arrangement(space or random_space(rng), n, PointSet.standard(k), tuple(gens))


def random_matrix(rng: random.Random, rows: int, cols: int, low: int = -2, high: int = 2,
                  density: float = 0.6) -> RationalMatrix:
    return RationalMatrix.from_rows(
        [[rng.randint(low, high) if rng.random() < density else 0 for _ in range(cols)] for _ in range(rows)]
    )
