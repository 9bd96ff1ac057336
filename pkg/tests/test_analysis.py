import math
import random

import numpy as np
import pytest

from tricent import (
    Graph,
    GraphValidationError,
    atec,
    cycle_index_fiedler,
    enumerate_triangles,
    fiedler_vector,
    rank_correlation,
    removal_experiment,
    triangle_importance,
)

from oracles import complete_graph, random_connected_graph, relabeled


class TestTriangleImportance:
    def test_k3_single_triangle(self, k3):
        tris = enumerate_triangles(k3)
        ranking = triangle_importance(k3, tris, atec(k3, 0.5))
        assert len(ranking) == 1
        entry = ranking.entries[0]
        assert entry.vertices == ("1", "2", "3")
        assert entry.score == pytest.approx(3 / math.sqrt(3), abs=1e-9)
        assert entry.rank == 1

    def test_empty_triangle_set_warns(self, p3):
        with pytest.warns(UserWarning, match="no triangles"):
            ranking = triangle_importance(p3, enumerate_triangles(p3), np.ones(3))
        assert len(ranking) == 0

    def test_scores_bounded_by_vertex_extremes(self, karate):
        tris = enumerate_triangles(karate)
        rep = atec(karate, 0.4)
        ranking = triangle_importance(karate, tris, rep)
        lo, hi = 3 * rep.scores.min(), 3 * rep.scores.max()
        for e in ranking.entries:
            assert lo - 1e-12 <= e.score <= hi + 1e-12

    def test_scores_nonincreasing_and_competition_ranks(self, karate):
        tris = enumerate_triangles(karate)
        ranking = triangle_importance(karate, tris, atec(karate, 0.4))
        scores = [e.score for e in ranking.entries]
        assert scores == sorted(scores, reverse=True)
        assert ranking.entries[0].rank == 1
        for pos, e in enumerate(ranking.entries, start=1):
            assert e.rank <= pos

    def test_exact_ties_share_rank(self, g14):
        # orbit symmetry makes triangles {1,2,3} and {5,6,7} score equally
        tris = enumerate_triangles(g14)
        ranking = triangle_importance(g14, tris, atec(g14, 0.6), tie_tol=1e-9)
        assert len(ranking) == 2
        assert [e.rank for e in ranking.entries] == [1, 1]

    def test_permutation_equivariance(self, g14):
        rng = random.Random(60001)
        shuffled, mapping = relabeled(g14, rng)
        base = triangle_importance(g14, enumerate_triangles(g14), atec(g14, 0.3))
        moved = triangle_importance(
            shuffled, enumerate_triangles(shuffled), atec(shuffled, 0.3)
        )
        base_set = {
            tuple(sorted(mapping[v] for v in e.vertices)): (e.score, e.rank)
            for e in base.entries
        }
        for e in moved.entries:
            score, rank = base_set[tuple(sorted(e.vertices))]
            assert e.score == pytest.approx(score, abs=1e-9)
            assert e.rank == rank

    def test_vector_length_checked(self, k3):
        with pytest.raises(ValueError, match="does not match"):
            triangle_importance(k3, enumerate_triangles(k3), np.ones(5))


class TestCycleIndexFiedler:
    def test_k3_nonnegative(self, k3):
        ranking = cycle_index_fiedler(k3, enumerate_triangles(k3))
        assert len(ranking) == 1
        assert ranking.entries[0].score >= 0

    def test_zero_iff_fiedler_constant_on_triangle(self):
        # K3 on {1,2,3} plus two nonadjacent apexes 4, 5 joined to all of 1,2,3:
        # lambda_2 = 3 is simple with eigenvector (0,0,0,1,-1)/sqrt(2), so the
        # core triangle scores exactly zero and every apex triangle does not.
        pairs = [("1", "2"), ("1", "3"), ("2", "3")]
        pairs += [(a, b) for a in ("1", "2", "3") for b in ("4", "5")]
        g = Graph.from_edge_labels(pairs)
        v = fiedler_vector(g)
        core = [g.id_of("1"), g.id_of("2"), g.id_of("3")]
        assert np.ptp(v[core]) < 1e-12  # constant on the core triangle
        ranking = cycle_index_fiedler(g, enumerate_triangles(g))
        assert ranking.score_of(("1", "2", "3")) < 1e-24
        assert ranking.score_of(("1", "2", "4")) > 0.1
        assert ranking.rank_of(("1", "2", "3")) == len(ranking)

    def test_celegans_golden_values(self, celegans, celegans_triangles):
        ranking = cycle_index_fiedler(celegans, celegans_triangles)
        assert ranking.top(1) == [("56", "153", "217")]
        assert ranking.score_of(("56", "153", "217")) == pytest.approx(0.1536, abs=5e-5)
        for tri in (("56", "123", "274"), ("56", "274", "433"), ("56", "123", "433")):
            assert ranking.score_of(tri) == pytest.approx(0.0506, abs=5e-5)
            assert ranking.rank_of(tri) == 2
        assert ranking.entries[4].rank == 5
        assert ranking.score_of(("149", "154", "352")) == pytest.approx(0.0040, abs=5e-5)

    def test_empty_warns(self, p3):
        with pytest.warns(UserWarning, match="no triangles"):
            ranking = cycle_index_fiedler(p3, enumerate_triangles(p3))
        assert len(ranking) == 0


class TestRemovalExperiment:
    def test_k4_minus_triangle_single_vertex(self):
        result = removal_experiment(complete_graph(4), ["1", "2", "3"])
        assert result.components_before == 1
        assert result.components_after == 1
        assert result.sizes_after == (1,)

    def test_celegans_cycle_triangle(self, celegans):
        result = removal_experiment(celegans, ["56", "153", "217"])
        assert result.components_before == 1
        assert result.components_after == 3
        assert result.summary == "components: 1 -> 3"

    def test_bookkeeping(self, celegans):
        result = removal_experiment(celegans, ["147", "186", "408"])
        assert sum(result.sizes_after) == celegans.n - 3
        assert result.components_after >= 1

    def test_unknown_vertex(self, k3):
        with pytest.raises(GraphValidationError, match="unknown"):
            removal_experiment(k3, ["nope"])


class TestRankCorrelation:
    def test_self_correlation_is_one(self, karate):
        rep = atec(karate, 0.6)
        for method in ("pearson", "spearman", "kendall"):
            assert rank_correlation(rep, rep, method) == 1.0

    def test_reversed_ranking_is_minus_one(self):
        a = np.array([1.0, 2.0, 3.0, 4.0, 5.0])
        assert rank_correlation(a, a[::-1].copy(), "spearman") == -1.0
        assert rank_correlation(a, a[::-1].copy(), "kendall") == -1.0

    def test_karate_alpha_one_matches_ec(self, karate):
        from tricent import eigenvector_centrality

        rho = rank_correlation(atec(karate, 1.0), eigenvector_centrality(karate), "spearman")
        assert rho == 1.0

    def test_constant_vector_rejected(self):
        with pytest.raises(ValueError, match="constant"):
            rank_correlation(np.ones(5), np.arange(5.0))

    def test_unknown_method(self):
        with pytest.raises(ValueError, match="unknown method"):
            rank_correlation(np.arange(4.0), np.arange(4.0), "cosine")

    def test_alignment_by_label(self, k3):
        from tricent import degree_centrality, make_report

        a = degree_centrality(k3)
        b = make_report("fake", {}, ("3", "1", "2"), np.array([3.0, 1.0, 2.0]), "raw")
        # after alignment both vectors are constant-free and identically ordered
        got = rank_correlation(
            make_report("x", {}, ("1", "2", "3"), np.array([1.0, 2.0, 3.0]), "raw"),
            b,
            "spearman",
        )
        assert got == 1.0
        with pytest.raises(ValueError, match="different vertex sets"):
            rank_correlation(
                a,
                make_report("y", {}, ("1", "2"), np.array([1.0, 2.0]), "raw"),
            )

    def test_length_mismatch(self):
        with pytest.raises(ValueError, match="length"):
            rank_correlation(np.arange(4.0), np.arange(5.0))


class TestTieRanking:
    def test_ties_within_tolerance_share_rank(self, k3):
        tris_graph = Graph.from_edge_labels(
            [("1", "2"), ("2", "3"), ("1", "3"), ("3", "4"), ("4", "5"), ("3", "5")]
        )
        tris = enumerate_triangles(tris_graph)
        scores = np.array([0.5, 0.5, 0.5, 0.5, 0.5])
        ranking = triangle_importance(tris_graph, tris, scores)
        assert [e.rank for e in ranking.entries] == [1, 1]

    def test_distinct_scores_skip_ranks(self):
        g = Graph.from_edge_labels(
            [("1", "2"), ("2", "3"), ("1", "3"), ("3", "4"), ("4", "5"), ("3", "5")]
        )
        tris = enumerate_triangles(g)
        scores = np.array([1.0, 1.0, 1.0, 0.1, 0.1])
        ranking = triangle_importance(g, tris, scores)
        ranks = {tuple(e.vertices): e.rank for e in ranking.entries}
        assert ranks[("1", "2", "3")] == 1
        assert ranks[("3", "4", "5")] == 2

    def test_random_graph_equal_scores_tie(self):
        rng = random.Random(12321)
        g = random_connected_graph(rng, 12, 0.5)
        tris = enumerate_triangles(g)
        if len(tris) >= 2:
            ranking = triangle_importance(g, tris, np.full(g.n, 0.25))
            assert len({e.rank for e in ranking.entries}) == 1
