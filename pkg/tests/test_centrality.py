import math
import random

import numpy as np
import pytest

from tricent import (
    Graph,
    NotConnectedError,
    betweenness_centrality,
    degree_centrality,
    eigenvector_centrality,
    enumerate_triangles,
    fiedler_vector,
    laplacian_matrix,
    subgraph_centrality,
    triangle_centrality,
)

from oracles import (
    adjacency_of,
    betweenness_by_enumeration,
    path_graph,
    random_connected_graph,
    relabeled,
    star_graph,
    subgraph_centrality_by_taylor,
)


class TestDegreeCentrality:
    def test_g14_row(self, g14):
        rep = degree_centrality(g14)
        assert rep.score_of("8") == 7
        for lab in ("1", "5", "4"):
            assert rep.score_of(lab) == 3
        for lab in ("2", "3", "6", "7"):
            assert rep.score_of(lab) == 2
        for lab in map(str, range(9, 15)):
            assert rep.score_of(lab) == 1
        assert rep.ranking[0].label == "8"

    def test_k3(self, k3):
        assert set(degree_centrality(k3).scores) == {2.0}

    def test_star(self):
        rep = degree_centrality(star_graph(6))
        assert rep.score_of("c") == 6
        assert rep.score_of("1") == 1


class TestEigenvectorCentrality:
    def test_k3_uniform(self, k3):
        rep = eigenvector_centrality(k3)
        assert np.allclose(rep.scores, 1 / math.sqrt(3), atol=1e-9)

    def test_p3(self, p3):
        rep = eigenvector_centrality(p3)
        assert np.allclose(rep.scores, [0.5, math.sqrt(2) / 2, 0.5], atol=1e-8)

    def test_karate_top_two(self, karate):
        assert eigenvector_centrality(karate).top(2) == ["34", "1"]

    def test_residual_and_positivity(self, karate, dolphins):
        for g in (karate, dolphins):
            rep = eigenvector_centrality(g)
            a = adjacency_of(g)
            lam = rep.meta["eigenvalue"]
            assert np.max(np.abs(a @ rep.scores - lam * rep.scores)) < 1e-8
            assert np.all(rep.scores > 0)

    def test_bipartite_converges(self):
        # K2 and even cycles defeat unshifted power iteration; the +1 shift must not
        g = Graph.from_edge_labels([("1", "2")])
        rep = eigenvector_centrality(g)
        assert np.allclose(rep.scores, 1 / math.sqrt(2), atol=1e-9)

    def test_disconnected_rejected(self):
        g = Graph.from_edge_labels([("a", "b"), ("c", "d")])
        with pytest.raises(NotConnectedError):
            eigenvector_centrality(g)


class TestTriangleCentrality:
    def test_g14_values_and_ratio(self, g14, g14_triangles):
        rep = triangle_centrality(g14, g14_triangles)
        assert rep.score_of("4") == pytest.approx(1.0)
        assert rep.score_of("1") == pytest.approx(0.5)
        assert rep.score_of("4") / rep.score_of("1") == pytest.approx(2.0)
        assert rep.score_of("8") == 0
        assert rep.score_of("9") == 0
        assert rep.ranking[0].label == "4"

    def test_k3_uniform_positive(self, k3):
        rep = triangle_centrality(k3, enumerate_triangles(k3))
        assert np.ptp(rep.scores) == 0
        assert rep.scores[0] > 0

    def test_triangle_free_all_zero_with_warning(self, p3):
        with pytest.warns(UserWarning, match="no triangles"):
            rep = triangle_centrality(p3, enumerate_triangles(p3))
        assert not rep.scores.any()

    def test_orbit_equality_on_g14(self, g14, g14_triangles):
        rep = triangle_centrality(g14, g14_triangles)
        assert rep.score_of("1") == rep.score_of("5")
        assert len({rep.score_of(l) for l in ("2", "3", "6", "7")}) == 1


class TestBetweennessCentrality:
    def test_p3_raw_pair_counts(self, p3):
        rep = betweenness_centrality(p3)
        assert rep.score_of("2") == 1.0
        assert rep.score_of("1") == 0.0

    def test_k3_all_zero(self, k3):
        assert not betweenness_centrality(k3).scores.any()

    def test_g14_unit_euclidean_row(self, g14):
        rep = betweenness_centrality(g14).unit_euclidean()
        assert rep.score_of("1") == pytest.approx(0.2664, abs=2e-3)
        assert rep.score_of("2") == 0
        assert rep.score_of("4") == pytest.approx(0.6176, abs=2e-3)
        assert rep.score_of("8") == pytest.approx(0.6903, abs=2e-3)
        assert rep.score_of("9") == 0

    def test_exact_mode_matches_enumeration(self):
        rng = random.Random(2718)
        for _ in range(8):
            g = random_connected_graph(rng, rng.randint(3, 9), 0.3)
            exact = betweenness_centrality(g, exact=True)
            oracle = [float(b) for b in betweenness_by_enumeration(g)]
            assert np.array_equal(exact.scores, np.array(oracle))

    def test_float_mode_close_to_exact(self):
        rng = random.Random(1414)
        for _ in range(5):
            g = random_connected_graph(rng, 12, 0.3)
            a = betweenness_centrality(g).scores
            b = betweenness_centrality(g, exact=True).scores
            assert np.allclose(a, b, atol=1e-12)


class TestSubgraphCentrality:
    def test_k2_is_cosh_one(self):
        g = Graph.from_edge_labels([("1", "2")])
        rep = subgraph_centrality(g)
        assert np.allclose(rep.scores, math.cosh(1.0), atol=1e-12)

    def test_k3_uniform(self, k3):
        assert np.ptp(subgraph_centrality(k3).scores) < 1e-12

    def test_g14_unit_euclidean_row(self, g14):
        rep = subgraph_centrality(g14).unit_euclidean()
        assert rep.score_of("1") == pytest.approx(0.3023, abs=2e-3)
        assert rep.score_of("2") == pytest.approx(0.2330, abs=2e-3)
        assert rep.score_of("8") == pytest.approx(0.6042, abs=2e-3)
        assert rep.score_of("9") == pytest.approx(0.1565, abs=2e-3)

    def test_matches_taylor_oracle(self):
        rng = random.Random(5150)
        for n in (6, 20, 40, 64):
            g = random_connected_graph(rng, n, 0.15)
            got = subgraph_centrality(g).scores
            want = subgraph_centrality_by_taylor(g)
            assert np.max(np.abs(got - want) / np.abs(want)) < 1e-8


class TestFiedlerVector:
    def test_p3(self, p3):
        v = fiedler_vector(p3)
        lap = laplacian_matrix(p3)
        lam2 = float(v @ lap @ v)
        assert lam2 == pytest.approx(1.0, abs=1e-10)
        assert np.allclose(v, [math.sqrt(0.5), 0.0, -math.sqrt(0.5)], atol=1e-8)

    def test_k2(self):
        g = Graph.from_edge_labels([("1", "2")])
        v = fiedler_vector(g)
        assert float(v @ laplacian_matrix(g) @ v) == pytest.approx(2.0, abs=1e-10)
        assert np.allclose(v, [math.sqrt(0.5), -math.sqrt(0.5)], atol=1e-10)

    def test_k3_degenerate_pair_still_valid(self, k3):
        v = fiedler_vector(k3)
        lap = laplacian_matrix(k3)
        lam2 = float(v @ lap @ v)
        assert lam2 == pytest.approx(3.0, abs=1e-9)
        assert np.max(np.abs(lap @ v - lam2 * v)) < 1e-8
        assert abs(v.sum()) < 1e-10

    def test_properties_on_real_graphs(self, karate, dolphins, celegans):
        for g in (karate, dolphins, celegans):
            v = fiedler_vector(g)
            lap = laplacian_matrix(g)
            lam2 = float(v @ lap @ v)
            assert lam2 > 0
            assert abs(np.linalg.norm(v) - 1.0) < 1e-12
            assert abs(v.sum()) < 1e-10
            assert np.max(np.abs(lap @ v - lam2 * v)) < 1e-8

    def test_sign_convention(self, p3):
        assert fiedler_vector(p3)[0] > 0

    def test_disconnected_rejected(self):
        g = Graph.from_edge_labels([("a", "b"), ("c", "d")])
        with pytest.raises(NotConnectedError):
            fiedler_vector(g)


class TestRelabelingInvariance:
    def test_rankings_survive_relabeling(self, g14):
        rng = random.Random(8080)
        shuffled, mapping = relabeled(g14, rng)
        measures = [
            (degree_centrality, ()),
            (eigenvector_centrality, ()),
            (betweenness_centrality, ()),
            (subgraph_centrality, ()),
        ]
        for fn, extra in measures:
            base = fn(g14, *extra)
            moved = fn(shuffled, *extra)
            for entry in base.ranking:
                assert moved.score_of(mapping[entry.label]) == pytest.approx(
                    entry.score, rel=1e-9, abs=1e-12
                )
        base = triangle_centrality(g14, enumerate_triangles(g14))
        moved = triangle_centrality(shuffled, enumerate_triangles(shuffled))
        for entry in base.ranking:
            assert moved.score_of(mapping[entry.label]) == pytest.approx(
                entry.score, rel=1e-12, abs=1e-12
            )


def test_sc_size_guard():
    with pytest.raises(ValueError, match="exceeds"):
        subgraph_centrality(path_graph(5001))
