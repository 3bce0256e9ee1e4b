"""Battery of exact cross-checks run by ``sparr selftest``."""

from __future__ import annotations

import random
from collections.abc import Callable, Iterator

from .arrangement_homology import complement_tables, points_case_betti, union_betti
from .divisor_poset import Arrangement, intersection_poset, order_complex
from .endspace import distinguish, end_cohomology_closed, end_cohomology_pipeline
from .oracle import (
    VerificationReport,
    euler_inclusion_exclusion,
    kernel_sum_identity_check,
    mayer_vietoris_pair_betti,
    random_arrangement,
    random_matrix,
    steenrod_sum_check,
)
from .simplicial import SimplicialComplex, betti, boundary_matrix
from .sp_tables import SpaceModel, binom, phi, sp_betti

DEFAULT_SEED = 20040801


def check_end_forms() -> Iterator[VerificationReport]:
    for g in range(5):
        for k in range(1, 5):
            for n in range(1, 9):
                yield VerificationReport(
                    "end_closed_vs_pipeline", {"g": g, "k": k, "n": n},
                    expected=end_cohomology_closed(g, k, n).ranks,
                    actual=end_cohomology_pipeline(g, k, n).ranks)


def check_end_spot_values() -> Iterator[VerificationReport]:
    for (g, k, n), expected in {(1, 3, 2): (1, 9, 9, 1, 0), (2, 1, 2): (1, 4, 4, 1, 0),
                                (1, 1, 2): (1, 2, 2, 1, 0)}.items():
        yield VerificationReport("end_spot_value", {"g": g, "k": k, "n": n},
                                 expected=expected, actual=end_cohomology_closed(g, k, n).ranks)
    rep = distinguish(1, 3, 2, 1, 2)
    yield VerificationReport("distinguish_M13_M21", {"n": 2}, expected=(True, True),
                             actual=(rep.homotopy_equivalent, rep.distinguishable))


def check_points_case(max_g: int = 3, max_k: int = 5, max_n: int = 6) -> Iterator[VerificationReport]:
    for g in range(max_g + 1):
        space = SpaceModel.closed_surface(g)
        for k in range(1, max_k + 1):
            for n in range(1, max_n + 1):
                arr = Arrangement.distinct_points(space, n, k)
                yield VerificationReport("points_case_vs_union", {"g": g, "k": k, "n": n},
                                         expected=points_case_betti(space, n, k), actual=union_betti(arr))


def check_union_desk() -> Iterator[VerificationReport]:
    torus, sphere = SpaceModel.closed_surface(1), SpaceModel.closed_surface(0)
    yield VerificationReport("union_two_tori", {}, expected=(1, 4, 2),
                             actual=union_betti(Arrangement.distinct_points(torus, 2, 2)).as_tuple())
    yield VerificationReport("union_two_spheres", {}, expected=(1, 0, 2),
                             actual=union_betti(Arrangement.distinct_points(sphere, 2, 2)).as_tuple())
    for space in (torus, sphere, SpaceModel.closed_surface(2), SpaceModel.wedge_of_circles(3)):
        for n in range(1, 5):
            for mults in ((1, 0), (2, 0), (1, 1), (2, 1)):
                if sum(mults) > n:
                    continue
                arr = Arrangement.from_vectors(space, n, [mults])
                yield VerificationReport("union_single_generator",
                                         {"space": space.to_json(), "n": n, "generator": list(mults)},
                                         expected=sp_betti(space, n - sum(mults)), actual=union_betti(arr))


def check_complement(max_g: int = 3, max_k: int = 4, max_n: int = 5) -> Iterator[VerificationReport]:
    for g in range(max_g + 1):
        for k in range(1, max_k + 1):
            for n in range(1, max_n + 1):
                table = complement_tables(Arrangement.distinct_points(SpaceModel.closed_surface(g), n, k))
                actual = table.cohomology.as_tuple(2 * n + 1)
                yield VerificationReport(
                    "complement_binomial", {"g": g, "k": k, "n": n},
                    expected=tuple(binom(2 * g + k - 1, t) if t <= n else 0 for t in range(2 * n + 1)),
                    actual=actual)
                yield VerificationReport(
                    "complement_phi", {"g": g, "k": k, "n": n},
                    expected=tuple(phi(g, k, n, 2 * n - t) for t in range(2 * n + 1)), actual=actual)


def random_grid(seed: int, count: int = 100) -> list[Arrangement]:
    rng = random.Random(seed)
    return [random_arrangement(rng) for _ in range(count)]


def check_euler(seed: int, count: int = 100) -> Iterator[VerificationReport]:
    for i, arr in enumerate(random_grid(seed, count)):
        yield VerificationReport("euler_inclusion_exclusion", {"seed": seed, "index": i},
                                 expected=euler_inclusion_exclusion(arr),
                                 actual=union_betti(arr).euler_characteristic())


def check_mayer_vietoris(seed: int, count: int = 100) -> Iterator[VerificationReport]:
    for i, arr in enumerate(random_grid(seed, count)):
        if len(arr.generators) == 2:
            yield VerificationReport("mayer_vietoris_pair", {"seed": seed, "index": i},
                                     expected=mayer_vietoris_pair_betti(arr), actual=union_betti(arr))


def check_steenrod(max_g: int = 4, max_m: int = 8, max_n: int = 8) -> Iterator[VerificationReport]:
    spaces = [SpaceModel.closed_surface(g) for g in range(max_g + 1)]
    spaces += [SpaceModel.wedge_of_circles(m) for m in range(max_m + 1)]
    spaces += [SpaceModel.punctured_surface(g, k) for g in range(max_g + 1) for k in range(1, 5)
               if 2 * g + k - 1 <= max_m]
    for space in spaces:
        for n in range(max_n + 1):
            yield steenrod_sum_check(space, n)


def random_complex(rng: random.Random, nvertices: int = 7, nfacets: int = 6, max_dim: int = 3) -> SimplicialComplex:
    facets = [rng.sample(range(nvertices), rng.randint(1, min(max_dim + 1, nvertices))) for _ in range(nfacets)]
    return SimplicialComplex.from_index_simplices(nvertices, facets)


def _components(K: SimplicialComplex) -> int:
    parent = list(range(len(K.vertices)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b in K.simplices(1):
        parent[find(a)] = find(b)
    return len({find(a) for a in range(len(parent))})


def check_simplicial(seed: int, count: int = 50) -> Iterator[VerificationReport]:
    rng = random.Random(seed)
    for i in range(count):
        K = random_complex(rng)
        for d in range(2, K.dimension + 1):
            yield VerificationReport("boundary_squared_zero", {"seed": seed, "index": i, "d": d},
                                     expected=True, actual=(boundary_matrix(K, d - 1) @ boundary_matrix(K, d)).is_zero())
        b = betti(K)
        yield VerificationReport("b0_components", {"seed": seed, "index": i},
                                 expected=_components(K), actual=b[0])
        yield VerificationReport("euler_identity", {"seed": seed, "index": i},
                                 expected=sum((-1) ** d * c for d, c in enumerate(K.f_vector())),
                                 actual=b.euler_characteristic())
    k4 = SimplicialComplex.from_index_simplices(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
    yield VerificationReport("k4_graph_betti", {}, expected=(1, 3), actual=betti(k4).as_tuple())
    for arr in random_grid(seed, 30):
        K = order_complex(intersection_poset(arr))
        yield VerificationReport("order_complex_euler_identity", {"seed": seed},
                                 expected=sum((-1) ** d * c for d, c in enumerate(K.f_vector())),
                                 actual=betti(K).euler_characteristic())


def check_kernel_sum(seed: int, count: int = 200) -> Iterator[VerificationReport]:
    rng = random.Random(seed)
    for _ in range(count):
        yield kernel_sum_identity_check(random_matrix(rng, 5, 7), random_matrix(rng, 5, 7))


def battery(seed: int = DEFAULT_SEED) -> dict[str, Callable[[], Iterator[VerificationReport]]]:
    """Named groups of checks, in acceptance order."""
    return {
        "end_closed_vs_pipeline": check_end_forms,
        "end_spot_values": check_end_spot_values,
        "points_case_vs_union": check_points_case,
        "union_desk": check_union_desk,
        "complement": check_complement,
        "euler_consistency": lambda: check_euler(seed),
        "mayer_vietoris": lambda: check_mayer_vietoris(seed),
        "steenrod": check_steenrod,
        "simplicial": lambda: check_simplicial(seed),
        "kernel_sum": lambda: check_kernel_sum(seed),
    }


def run_selftest(seed: int = DEFAULT_SEED) -> dict[str, list[VerificationReport]]:
    return {name: list(fn()) for name, fn in battery(seed).items()}
