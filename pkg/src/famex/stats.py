"""Numeric kernels: Pearson correlation, entropies, mutual information.

All entropies are in bits (log base 2). Correlation and covariance use
population (1/n) normalization; the correlation coefficient itself is
normalization-invariant.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .dataset import Dataset, DiscretizedColumn, discretize


@dataclass(frozen=True)
class CorrelationMatrix:
    """Symmetric matrix of pairwise feature correlations."""

    values: np.ndarray
    absolute: bool = True

    @property
    def n(self) -> int:
        return self.values.shape[0]


@dataclass(frozen=True)
class MutualInformationVector:
    """Per-feature mutual information with the class labels, in bits."""

    values: np.ndarray
    bin_count: int


def pearson(x, y) -> float:
    """Pearson correlation coefficient of two equal-length sequences.

    Returns 0.0 when either input has zero variance: a constant column
    carries no redundancy signal and must not poison the graph with NaN.
    """
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.shape != y.shape or x.ndim != 1:
        raise ValueError(f"length mismatch: {x.shape} vs {y.shape}")
    if x.size < 2:
        raise ValueError(f"need at least 2 points, got {x.size}")
    dx = x - x.mean()
    dy = y - y.mean()
    var_x = float(dx @ dx)
    var_y = float(dy @ dy)
    if var_x == 0.0 or var_y == 0.0:
        return 0.0
    r = float(dx @ dy) / np.sqrt(var_x * var_y)
    return float(min(1.0, max(-1.0, r)))


def correlation_matrix(dataset: Dataset) -> CorrelationMatrix:
    """Absolute Pearson correlation over all feature pairs (class excluded).

    Constant columns get 0 against everything else and 1 on the diagonal.
    """
    X = dataset.samples
    centered = X - X.mean(axis=0)
    norms = np.sqrt((centered * centered).sum(axis=0))
    ok = norms > 0.0
    safe = np.where(ok, norms, 1.0)
    unit = centered / safe
    corr = unit.T @ unit
    corr[~ok, :] = 0.0
    corr[:, ~ok] = 0.0
    np.fill_diagonal(corr, 1.0)
    np.clip(corr, -1.0, 1.0, out=corr)
    return CorrelationMatrix(values=np.abs(corr), absolute=True)


def entropy(labels) -> float:
    """Shannon entropy of a categorical sequence, in bits."""
    labels = list(labels)
    if not labels:
        raise ValueError("entropy of an empty sequence is undefined")
    counts = np.array(list(Counter(labels).values()), dtype=np.float64)
    p = counts / counts.sum()
    return float(-(p * np.log2(p)).sum())


def joint_entropy(a, b) -> float:
    """Entropy of the empirical joint distribution over pairs (a_i, b_i)."""
    a = list(a)
    b = list(b)
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return entropy(zip(a, b))


def mutual_information(feature, labels) -> float:
    """MI(C, f) = H(C) + H(f) - H(C, f), clamped at 0 against float underflow.

    feature may be a DiscretizedColumn or any categorical sequence; the
    measure is symmetric in its arguments.
    """
    if isinstance(feature, DiscretizedColumn):
        feature = feature.bin_indices
    feature = list(feature)
    labels = list(labels)
    if len(feature) != len(labels):
        raise ValueError(f"length mismatch: {len(feature)} vs {len(labels)}")
    mi = entropy(labels) + entropy(feature) - joint_entropy(feature, labels)
    return max(0.0, mi)


def mi_classif(dataset: Dataset, bin_count: int = 10) -> MutualInformationVector:
    """Mutual information of every (discretized) feature with the labels."""
    values = np.array(
        [
            mutual_information(discretize(dataset.samples[:, j], bin_count), dataset.labels)
            for j in range(dataset.n_features)
        ]
    )
    return MutualInformationVector(values=values, bin_count=bin_count)
