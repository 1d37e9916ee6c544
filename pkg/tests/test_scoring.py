import numpy as np
import pytest

from famex import (
    build_fam_graph,
    famex,
    importance_scores,
    mi_classif,
    rank_features,
    relevance_scores,
    similarity_scores,
)
from conftest import make_dataset, planted_signal_dataset
from oracles import (
    oracle_importance_scores,
    oracle_relevance_scores,
    oracle_similarity_scores,
)


class TestSimilarityScores:
    def test_uniform_grades(self):
        assert similarity_scores([1, 1, 1]) == pytest.approx([1.0, 1.0, 1.0])

    def test_one_of_each(self):
        assert similarity_scores([1, 2, 3]) == pytest.approx([0.5, 2.0, 4.5])

    def test_all_high(self):
        assert similarity_scores([3, 3]) == pytest.approx([3.0, 3.0])

    def test_empty_rejected(self):
        with pytest.raises(ValueError, match="empty"):
            similarity_scores([])

    def test_out_of_range_grade_rejected(self):
        with pytest.raises(ValueError, match="grades"):
            similarity_scores([1, 4])


class TestRelevanceScores:
    def test_proportional(self):
        assert relevance_scores([0.2, 0.4, 0.6]) == pytest.approx([0.5, 1.0, 1.5])

    def test_uniform(self):
        assert relevance_scores([0.5, 0.5]) == pytest.approx([1.0, 1.0])

    def test_zero_entry(self):
        assert relevance_scores([0.0, 0.8]) == pytest.approx([0.0, 2.0])

    def test_all_zero_rejected(self):
        with pytest.raises(ValueError, match="all-zero"):
            relevance_scores([0.0, 0.0, 0.0])

    def test_sums_to_n(self):
        rng = np.random.default_rng(0)
        mi = rng.uniform(0.01, 2.0, 9)
        assert sum(relevance_scores(mi)) == pytest.approx(9.0)


class TestImportanceScores:
    def test_single(self):
        assert importance_scores([1.5], [0.5]) == pytest.approx([3.0])

    def test_identity(self):
        assert importance_scores([1, 1, 1], [1, 1, 1]) == pytest.approx([1, 1, 1])

    def test_direct_arithmetic(self):
        assert importance_scores([0.5, 2.0], [4.5, 0.5]) == pytest.approx([1 / 9, 4.0])

    def test_length_mismatch(self):
        with pytest.raises(ValueError, match="mismatch"):
            importance_scores([1.0], [1.0, 2.0])


class TestFamexPipeline:
    def test_equals_manual_composition(self, planted):
        scores = famex(planted, bin_count=8, thresholds=(0.6, 0.85))
        graph = build_fam_graph(planted, 0.6, 0.85)
        grades = graph.grades()
        sim = oracle_similarity_scores(grades)
        rel = oracle_relevance_scores(mi_classif(planted, 8).values.tolist())
        imp = oracle_importance_scores(rel, sim)
        got = [f.importance_score for f in scores.features]
        assert got == pytest.approx(imp, rel=1e-12)
        assert [f.grade for f in scores.features] == grades

    def test_deterministic(self, planted):
        a = famex(planted)
        b = famex(planted)
        assert a == b

    def test_equal_mi_independent_features_score_equally(self):
        # four mutually independent copies of the label pattern, shifted apart
        y = [0, 1] * 30
        base = np.array(y, dtype=float)
        rng = np.random.default_rng(8)
        X = np.column_stack([base for _ in range(4)])
        # decorrelate pairwise by permuting rows within each class
        for j in range(1, 4):
            for cls in (0, 1):
                idx = np.nonzero(base == cls)[0]
                X[idx, j] = X[rng.permutation(idx), j]
        ds = make_dataset(X, y)
        scores = famex(ds)
        imps = [f.importance_score for f in scores.features]
        assert max(imps) - min(imps) < 1e-9

    def test_mi_scaling_leaves_importance_invariant(self):
        rng = np.random.default_rng(1)
        mi = rng.uniform(0.01, 1.0, 6)
        sim = oracle_similarity_scores([1, 2, 3, 1, 2, 3])
        base = importance_scores(relevance_scores(mi), sim)
        scaled = importance_scores(relevance_scores(7.3 * mi), sim)
        assert scaled == pytest.approx(base, rel=1e-12)

    def test_duplicating_a_feature_degrades_its_relative_importance(self):
        ds = planted_signal_dataset(n_signal=1, n_noise=3, m=400, seed=3)
        base = famex(ds)
        base_ratio = base.features[0].importance_score / base.features[1].importance_score

        X = ds.samples
        dup = make_dataset(np.column_stack([X, X[:, 0]]), list(ds.labels), name="dup")
        scores = famex(dup)
        assert scores.features[0].grade == 3
        assert scores.features[-1].grade == 3
        dup_ratio = scores.features[0].importance_score / scores.features[1].importance_score
        assert dup_ratio < base_ratio

    def test_importance_monotone_in_own_mi(self):
        sim = oracle_similarity_scores([1, 2, 3, 2])
        rng = np.random.default_rng(2)
        for _ in range(50):
            mi = rng.uniform(0.05, 1.0, 4)
            bumped = mi.copy()
            bumped[2] += 0.3
            before = importance_scores(relevance_scores(mi), sim)[2]
            after = importance_scores(relevance_scores(bumped), sim)[2]
            assert after >= before - 1e-12

    def test_constant_feature_ranks_last(self):
        y = [0, 1] * 25
        rng = np.random.default_rng(5)
        X = np.column_stack(
            [np.array(y, float) + rng.normal(0, 0.1, 50), rng.normal(size=50), np.full(50, 2.0)]
        )
        ds = make_dataset(X, y)
        scores = famex(ds)
        assert scores.features[2].grade == 1
        assert scores.features[2].relevance == 0.0
        assert rank_features(scores)[-1] == "f2"


class TestRankFeatures:
    def scores_with_importances(self, imps):
        y = [0, 1] * 20
        rng = np.random.default_rng(0)
        ds = make_dataset(rng.normal(size=(40, len(imps))), y)
        scores = famex(ds)
        # rebuild with forced importances, keeping everything else
        from dataclasses import replace

        feats = tuple(
            replace(f, importance_score=imps[i]) for i, f in enumerate(scores.features)
        )
        return replace(scores, features=feats)

    def test_descending_sort(self):
        scores = self.scores_with_importances([0.1, 0.9, 0.5])
        assert rank_features(scores) == ["f1", "f2", "f0"]

    def test_ties_break_by_column_index(self):
        scores = self.scores_with_importances([0.5, 0.5, 0.5])
        assert rank_features(scores) == ["f0", "f1", "f2"]

    def test_records_are_rank_ordered_and_complete(self, planted):
        records = famex(planted).to_records()
        assert [r["rank"] for r in records] == list(range(1, len(records) + 1))
        assert all(
            set(r) == {"name", "grade", "similarity_score", "relevance", "relevance_score",
                       "importance_score", "rank"}
            for r in records
        )
        assert records[0]["importance_score"] == max(r["importance_score"] for r in records)
