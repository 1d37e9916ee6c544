"""Competing importance estimators: permutation importance and sampled Shapley.

Both measure importance against a classifier on a stratified 75/25 holdout so
memorization is never rewarded. Shapley values use Monte-Carlo permutation
sampling of the retraining game: v(S) is the held-out accuracy of the
classifier refit on feature subset S, and v(empty) is the majority-class rate.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .models import ClassifierSpec, accuracy, derived_rng, stratified_holdout, train

HOLDOUT_FRACTION = 0.25
DEFAULT_PERMUTATIONS = 128


@dataclass(frozen=True)
class ImportanceVector:
    method: str
    values: np.ndarray
    seed: int
    metadata: dict = field(default_factory=dict)

    def ranking(self) -> list[int]:
        """Feature indices by descending importance, ties by index."""
        order = sorted(range(len(self.values)), key=lambda i: (-self.values[i], i))
        return order

    def to_records(self, feature_names) -> list[dict]:
        """Rank-ordered records in the same shape the scoring module emits."""
        names = list(feature_names)
        if len(names) != len(self.values):
            raise ValueError(f"{len(names)} names for {len(self.values)} values")
        return [
            {
                "name": names[i],
                "importance_score": float(self.values[i]),
                "rank": rank,
                "method": self.method,
            }
            for rank, i in enumerate(self.ranking(), start=1)
        ]


def permutation_importance(
    spec: ClassifierSpec,
    X,
    y,
    repeats: int = 10,
    seed: int = 0,
) -> ImportanceVector:
    """Accuracy drop on held-out data when one feature column is shuffled.

    The model is fit once; each feature's importance is the baseline held-out
    accuracy minus the mean accuracy over `repeats` independent shuffles of
    that column. A feature the model never consults scores exactly 0.
    """
    if repeats < 1:
        raise ValueError(f"repeats must be >= 1, got {repeats}")
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y)
    train_idx, test_idx = stratified_holdout(y, HOLDOUT_FRACTION, derived_rng(seed, "split"))
    model = train(spec, X[train_idx], y[train_idx])
    X_test, y_test = X[test_idx], y[test_idx]
    baseline = accuracy(model, X_test, y_test)

    values = np.zeros(X.shape[1])
    for j in range(X.shape[1]):
        drop = 0.0
        for r in range(repeats):
            rng = derived_rng(seed, "perm", j, r)
            shuffled = X_test.copy()
            rng.shuffle(shuffled[:, j])
            drop += baseline - accuracy(model, shuffled, y_test)
        values[j] = drop / repeats
    return ImportanceVector(
        method="pfi", values=values, seed=seed, metadata={"repeats": repeats}
    )


def make_characteristic(spec: ClassifierSpec, X, y, seed: int = 0):
    """The retraining game v: feature-index tuple -> held-out accuracy.

    v(()) is the majority-class rate of the holdout. Results are memoized, so
    repeated subsets (inevitable under permutation sampling) cost nothing.
    """
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y)
    train_idx, test_idx = stratified_holdout(y, HOLDOUT_FRACTION, derived_rng(seed, "split"))
    y_train, y_test = y[train_idx], y[test_idx]
    classes, counts = np.unique(y_train, return_counts=True)
    majority = classes[np.argmax(counts)]
    cache: dict[tuple[int, ...], float] = {}

    def v(subset) -> float:
        key = tuple(sorted(int(j) for j in subset))
        if key not in cache:
            if not key:
                cache[key] = float(np.mean(y_test == majority))
            else:
                cols = list(key)
                model = train(spec, X[np.ix_(train_idx, cols)], y_train)
                cache[key] = accuracy(model, X[np.ix_(test_idx, cols)], y_test)
        return cache[key]

    return v


def shapley_importance(
    spec: ClassifierSpec,
    X,
    y,
    permutations: int = DEFAULT_PERMUTATIONS,
    seed: int = 0,
) -> ImportanceVector:
    """Monte-Carlo permutation estimate of Shapley values for the retraining game.

    For each sampled feature ordering, every feature is credited with its
    marginal accuracy contribution v(prefix + {i}) - v(prefix); values are
    averaged over orderings.
    """
    if permutations < 1:
        raise ValueError(f"permutations must be >= 1, got {permutations}")
    X = np.asarray(X, dtype=np.float64)
    n = X.shape[1]
    v = make_characteristic(spec, X, y, seed)
    rng = derived_rng(seed, "shapley")
    totals = np.zeros(n)
    for _ in range(permutations):
        order = rng.permutation(n)
        prefix: list[int] = []
        prev = v(prefix)
        for j in order:
            prefix.append(int(j))
            cur = v(prefix)
            totals[j] += cur - prev
            prev = cur
    return ImportanceVector(
        method="shapley_mc",
        values=totals / permutations,
        seed=seed,
        metadata={"permutations": permutations},
    )
