"""Exit criteria. Every comparison is exact; each criterion reports one PASS/FAIL line."""

import random
import time
from contextlib import contextmanager

import networkx as nx
import pytest

from conftest import ACCEPTANCE_LINES
from sparr.arrangement_homology import _poset_betti, _poset_reduced_betti, complement_tables, points_case_betti, union_betti
from sparr.divisor_poset import Arrangement, intersection_poset, order_complex
from sparr.endspace import distinguish, end_cohomology_closed, end_cohomology_pipeline
from sparr.oracle import (
    euler_inclusion_exclusion,
    kernel_sum_identity_check,
    mayer_vietoris_pair_betti,
    random_arrangement,
    random_matrix,
    steenrod_sum_check,
)
from sparr.simplicial import SimplicialComplex, betti, boundary_matrix
from sparr.sp_tables import SpaceModel, binom, phi, sp_betti

SEED = 20040801


@contextmanager
def criterion(number, title):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        ACCEPTANCE_LINES.append(f"FAIL criterion {number}: {title} ({time.perf_counter() - start:.2f}s)")
        print(ACCEPTANCE_LINES[-1])
        raise
    ACCEPTANCE_LINES.append(f"PASS criterion {number}: {title} ({time.perf_counter() - start:.2f}s)")
    print(ACCEPTANCE_LINES[-1])


def random_grid():
    rng = random.Random(SEED)
    return [random_arrangement(rng, max_generators=4, max_points=3, max_multiplicity=2, max_n=5) for _ in range(100)]


def fresh_caches():
    _poset_betti.cache_clear()
    _poset_reduced_betti.cache_clear()


def test_criterion_01_end_closed_vs_pipeline():
    with criterion(1, "end cohomology closed form == pipeline, g<=4 k<=4 n<=8"):
        start = time.perf_counter()
        for g in range(5):
            for k in range(1, 5):
                for n in range(1, 9):
                    closed = end_cohomology_closed(g, k, n)
                    pipe = end_cohomology_pipeline(g, k, n)
                    for p in range(2 * n + 1):
                        assert closed[p] == pipe[p], (g, k, n, p)
        assert time.perf_counter() - start < 1.0


def test_criterion_02_end_spot_values():
    with criterion(2, "end cohomology spot values and M_{1,3} vs M_{2,1}"):
        assert end_cohomology_closed(1, 3, 2).ranks == (1, 9, 9, 1, 0)
        assert end_cohomology_closed(2, 1, 2).ranks == (1, 4, 4, 1, 0)
        assert end_cohomology_closed(1, 1, 2).ranks == (1, 2, 2, 1, 0)
        rep = distinguish(1, 3, 2, 1, 2)
        assert rep.distinguishable is True
        assert rep.homotopy_equivalent is True


def test_criterion_03_points_case_equals_union():
    with criterion(3, "points-case closed form == union Betti, g<=3 k<=5 n<=6"):
        fresh_caches()
        start = time.perf_counter()
        for g in range(4):
            space = SpaceModel.closed_surface(g)
            for k in range(1, 6):
                for n in range(1, 7):
                    assert points_case_betti(space, n, k) == union_betti(
                        Arrangement.distinct_points(space, n, k)), (g, k, n)
        assert time.perf_counter() - start < 30.0


def test_criterion_04_union_desk_checks():
    with criterion(4, "union desk checks"):
        torus, sphere = SpaceModel.closed_surface(1), SpaceModel.closed_surface(0)
        assert union_betti(Arrangement.distinct_points(torus, 2, 2)).as_tuple() == (1, 4, 2)
        assert union_betti(Arrangement.distinct_points(sphere, 2, 2)).as_tuple() == (1, 0, 2)
        spaces = [SpaceModel.closed_surface(g) for g in range(4)] + [
            SpaceModel.punctured_surface(1, 2), SpaceModel.wedge_of_circles(3)]
        for space in spaces:
            for n in range(1, 6):
                for vec in [(1, 0, 0), (2, 0, 0), (1, 1, 0), (1, 1, 1), (2, 1, 0), (2, 2, 1)]:
                    if sum(vec) <= n:
                        arr = Arrangement.from_vectors(space, n, [vec])
                        assert union_betti(arr) == sp_betti(space, n - sum(vec))


def test_criterion_05_complement_desk_checks():
    with criterion(5, "complement of k points == C(2g+k-1, t) == phi, g<=3 k<=4 n<=5"):
        for g in range(4):
            for k in range(1, 5):
                for n in range(1, 6):
                    coh = complement_tables(Arrangement.distinct_points(SpaceModel.closed_surface(g), n, k)).cohomology
                    for t in range(2 * n + 1):
                        expected = binom(2 * g + k - 1, t) if t <= n else 0
                        assert coh[t] == expected, (g, k, n, t)
                        assert coh[t] == phi(g, k, n, 2 * n - t), (g, k, n, t)


def test_criterion_06_euler_consistency():
    with criterion(6, "union Euler characteristic == inclusion-exclusion, 100 seeded arrangements"):
        grid = random_grid()
        assert len(grid) == 100
        for arr in grid:
            assert union_betti(arr).euler_characteristic() == euler_inclusion_exclusion(arr), arr


def test_criterion_07_mayer_vietoris():
    with criterion(7, "union Betti == Mayer-Vietoris on two-generator arrangements of the grid"):
        pairs = [arr for arr in random_grid() if len(arr.generators) == 2]
        assert pairs
        for arr in pairs:
            assert union_betti(arr) == mayer_vietoris_pair_betti(arr), arr


def test_criterion_08_steenrod():
    with criterion(8, "Steenrod summation, g<=4 m<=8 n<=8"):
        spaces = [SpaceModel.closed_surface(g) for g in range(5)]
        spaces += [SpaceModel.wedge_of_circles(m) for m in range(9)]
        spaces += [SpaceModel.punctured_surface(g, k) for g in range(5) for k in range(1, 9)
                   if 2 * g + k - 1 <= 8]
        for space in spaces:
            for n in range(9):
                assert steenrod_sum_check(space, n).passed, (space, n)


def test_criterion_09_simplicial_engine():
    with criterion(9, "simplicial engine: d^2=0, b0=components, K4=(1,3), Euler identity"):
        rng = random.Random(SEED)
        for _ in range(100):
            nv = rng.randint(1, 8)
            facets = [rng.sample(range(nv), rng.randint(1, min(4, nv))) for _ in range(rng.randint(0, 8))]
            K = SimplicialComplex.from_index_simplices(nv, facets)
            for d in range(2, K.dimension + 1):
                assert (boundary_matrix(K, d - 1) @ boundary_matrix(K, d)).is_zero()
            G = nx.Graph()
            G.add_nodes_from(range(nv))
            G.add_edges_from(K.simplices(1))
            assert betti(K)[0] == nx.number_connected_components(G)
            assert betti(K).euler_characteristic() == sum((-1) ** d * c for d, c in enumerate(K.f_vector()))
        k4 = SimplicialComplex.from_index_simplices(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])
        assert betti(k4).as_tuple() == (1, 3)
        arrangements = random_grid() + [Arrangement.distinct_points(SpaceModel.closed_surface(1), n, k)
                                        for k in range(1, 6) for n in range(1, 7)]
        for arr in arrangements:
            P = intersection_poset(arr)
            for j in range(P.max_mu + 1):
                K = order_complex(P.ideal(j))
                assert betti(K).euler_characteristic() == sum((-1) ** d * c for d, c in enumerate(K.f_vector()))


def test_criterion_10_kernel_sum_identity():
    with criterion(10, "kernel-sum identity on 200 seeded random matrix pairs"):
        rng = random.Random(SEED)
        for _ in range(200):
            rep = kernel_sum_identity_check(random_matrix(rng, 5, 7), random_matrix(rng, 5, 7))
            assert rep.passed, rep


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
