"""Feature importance scoring: similarity, relevance, and their ratio.

similarity_score_i = grade_i^2 / mean(grades)          (penalizes redundancy)
relevance_score_i  = mi_i / mean(mi)                   (rewards class signal)
importance_i       = relevance_score_i / similarity_score_i
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dataset import Dataset
from .fam import (
    DEFAULT_THRESHOLD_HIGH,
    DEFAULT_THRESHOLD_LOW,
    THRESHOLD_TOLERANCE,
    FamGraph,
    build_fam_graph,
)
from .stats import mi_classif


@dataclass(frozen=True)
class FeatureScore:
    name: str
    index: int
    grade: int
    similarity_score: float
    relevance: float
    relevance_score: float
    importance_score: float


@dataclass(frozen=True)
class FeatureScores:
    """Per-feature scores in original column order, plus the source graph."""

    features: tuple[FeatureScore, ...]
    graph: FamGraph
    bin_count: int

    def importance(self) -> np.ndarray:
        return np.array([f.importance_score for f in self.features])

    def to_records(self) -> list[dict]:
        """JSON-ready records ordered by rank (importance desc, index asc)."""
        ranked = rank_features(self)
        rank_of = {name: i + 1 for i, name in enumerate(ranked)}
        records = [
            {
                "name": f.name,
                "grade": f.grade,
                "similarity_score": f.similarity_score,
                "relevance": f.relevance,
                "relevance_score": f.relevance_score,
                "importance_score": f.importance_score,
                "rank": rank_of[f.name],
            }
            for f in self.features
        ]
        records.sort(key=lambda r: r["rank"])
        return records


def similarity_scores(grades) -> list[float]:
    """grade^2 over the mean grade, per feature."""
    grades = list(grades)
    if not grades:
        raise ValueError("empty grade list")
    if any(g not in (1, 2, 3) for g in grades):
        raise ValueError(f"grades must be in {{1, 2, 3}}, got {grades}")
    mean = sum(grades) / len(grades)
    return [g * g / mean for g in grades]


def relevance_scores(mi) -> list[float]:
    """Mutual information over its mean, per feature."""
    values = np.asarray(getattr(mi, "values", mi), dtype=np.float64)
    if values.size == 0:
        raise ValueError("empty MI vector")
    mean = float(values.mean())
    if mean == 0.0:
        raise ValueError(
            "all-zero mutual information: the features carry no class signal, "
            "so relevance scores are undefined"
        )
    return [float(v / mean) for v in values]


def importance_scores(relevance, similarity) -> list[float]:
    """Element-wise relevance_score / similarity_score."""
    if len(relevance) != len(similarity):
        raise ValueError(f"length mismatch: {len(relevance)} vs {len(similarity)}")
    return [r / s for r, s in zip(relevance, similarity)]


def famex(
    dataset: Dataset,
    bin_count: int = 10,
    thresholds: tuple[float, float] = (DEFAULT_THRESHOLD_LOW, DEFAULT_THRESHOLD_HIGH),
    tolerance: float = THRESHOLD_TOLERANCE,
) -> FeatureScores:
    """End-to-end scoring pipeline. Deterministic: no randomness anywhere."""
    lo, hi = thresholds
    graph = build_fam_graph(dataset, lo, hi, tolerance)
    grades = graph.grades()
    sim = similarity_scores(grades)
    mi = mi_classif(dataset, bin_count)
    rel = relevance_scores(mi)
    imp = importance_scores(rel, sim)
    features = tuple(
        FeatureScore(
            name=name,
            index=i,
            grade=grades[i],
            similarity_score=sim[i],
            relevance=float(mi.values[i]),
            relevance_score=rel[i],
            importance_score=imp[i],
        )
        for i, name in enumerate(dataset.feature_names)
    )
    return FeatureScores(features=features, graph=graph, bin_count=bin_count)


def rank_features(scores: FeatureScores) -> list[str]:
    """Feature names by descending importance; ties break on column index."""
    ordered = sorted(scores.features, key=lambda f: (-f.importance_score, f.index))
    return [f.name for f in ordered]
