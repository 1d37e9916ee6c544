"""Top-p%/bottom-p% evaluation protocol.

For each dataset and importance method the feature ranking is computed once;
classifiers are then cross-validated on the top and bottom feature subsets
over repeated, independently shuffled k-fold runs. Cell dispersion is the
std of per-iteration mean accuracies. The averages block aggregates each
(method, classifier, subset) across datasets and is always derived from the
cells, never entered independently.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .baselines import DEFAULT_PERMUTATIONS, permutation_importance, shapley_importance
from .dataset import Dataset
from .fam import DEFAULT_THRESHOLD_HIGH, DEFAULT_THRESHOLD_LOW
from .models import CLASSIFIER_KINDS, ClassifierSpec, derived_rng, stratified_kfold
from .scoring import famex, rank_features

METHODS = ("famex", "pfi", "shapley_mc")
SUBSETS = ("top", "bottom")


class HarnessError(RuntimeError):
    """A cell of the experiment grid failed; the coordinate is in the message."""


@dataclass(frozen=True)
class ExperimentConfig:
    datasets: tuple[Dataset, ...]
    methods: tuple[str, ...] = ("famex",)
    classifiers: tuple[str, ...] = CLASSIFIER_KINDS
    top_fraction: float = 0.3
    bottom_fraction: float = 0.3
    folds: int = 10
    iterations: int = 10
    seed: int = 42
    bin_count: int = 10
    thresholds: tuple[float, float] = (DEFAULT_THRESHOLD_LOW, DEFAULT_THRESHOLD_HIGH)
    pfi_repeats: int = 10
    shapley_permutations: int = DEFAULT_PERMUTATIONS
    probe_classifier: str = "decision_tree"
    subsets: tuple[str, ...] = SUBSETS

    def __post_init__(self):
        if not self.subsets or set(self.subsets) - set(SUBSETS):
            raise ValueError(f"subsets must be a non-empty subset of {SUBSETS}")
        if not self.datasets:
            raise ValueError("no datasets configured")
        unknown = set(self.methods) - set(METHODS)
        if unknown:
            raise ValueError(f"unknown methods: {sorted(unknown)}")
        unknown = set(self.classifiers) - set(CLASSIFIER_KINDS)
        if unknown:
            raise ValueError(f"unknown classifiers: {sorted(unknown)}")
        if not self.methods or not self.classifiers:
            raise ValueError("methods and classifiers must be non-empty")
        for frac in (self.top_fraction, self.bottom_fraction):
            if not 0.0 < frac <= 1.0:
                raise ValueError(f"fractions must be in (0, 1], got {frac}")
        if self.folds < 2:
            raise ValueError(f"folds must be >= 2, got {self.folds}")
        if self.iterations < 1:
            raise ValueError(f"iterations must be >= 1, got {self.iterations}")

    def to_dict(self) -> dict:
        return {
            "datasets": [d.name for d in self.datasets],
            "methods": list(self.methods),
            "classifiers": list(self.classifiers),
            "top_fraction": self.top_fraction,
            "bottom_fraction": self.bottom_fraction,
            "folds": self.folds,
            "iterations": self.iterations,
            "seed": self.seed,
            "bin_count": self.bin_count,
            "thresholds": list(self.thresholds),
            "pfi_repeats": self.pfi_repeats,
            "shapley_permutations": self.shapley_permutations,
            "probe_classifier": self.probe_classifier,
            "subsets": list(self.subsets),
        }


@dataclass(frozen=True)
class ReportCell:
    dataset: str
    method: str
    classifier: str
    subset: str
    mean: float
    std: float
    features: tuple[str, ...]


@dataclass(frozen=True)
class EvaluationReport:
    cells: tuple[ReportCell, ...]
    averages: tuple[dict, ...]
    config: dict = field(default_factory=dict)

    def cell(self, dataset: str, method: str, classifier: str, subset: str) -> ReportCell:
        for c in self.cells:
            if (c.dataset, c.method, c.classifier, c.subset) == (dataset, method, classifier, subset):
                return c
        raise KeyError((dataset, method, classifier, subset))

    def average(self, method: str, classifier: str, subset: str) -> float:
        for a in self.averages:
            if (a["method"], a["classifier"], a["subset"]) == (method, classifier, subset):
                return a["mean"]
        raise KeyError((method, classifier, subset))

    def to_dict(self) -> dict:
        return {
            "cells": [
                {
                    "dataset": c.dataset,
                    "method": c.method,
                    "classifier": c.classifier,
                    "subset": c.subset,
                    "mean": c.mean,
                    "std": c.std,
                    "features": list(c.features),
                }
                for c in self.cells
            ],
            "averages": list(self.averages),
            "config": self.config,
        }


def report_from_dict(payload: dict) -> EvaluationReport:
    cells = tuple(
        ReportCell(
            dataset=c["dataset"],
            method=c["method"],
            classifier=c["classifier"],
            subset=c["subset"],
            mean=c["mean"],
            std=c["std"],
            features=tuple(c["features"]),
        )
        for c in payload["cells"]
    )
    return EvaluationReport(
        cells=cells, averages=tuple(payload["averages"]), config=payload.get("config", {})
    )


def select_subset(ranking: list[str], fraction: float, end: str) -> list[str]:
    """First/last ceil(fraction * n) names of a ranking."""
    if not ranking:
        raise ValueError("empty ranking")
    if not 0.0 < fraction <= 1.0:
        raise ValueError(f"fraction must be in (0, 1], got {fraction}")
    k = math.ceil(fraction * len(ranking))
    if end == "top":
        return list(ranking[:k])
    if end == "bottom":
        return list(ranking[-k:])
    raise ValueError(f"end must be 'top' or 'bottom', got {end!r}")


def compute_ranking(dataset: Dataset, method: str, config: ExperimentConfig) -> list[str]:
    """Feature names, most important first, for one method on one dataset."""
    if method == "famex":
        return rank_features(famex(dataset, config.bin_count, config.thresholds))
    probe = ClassifierSpec(kind=config.probe_classifier, seed=config.seed)
    seed = int(derived_rng(config.seed, dataset.name, method).integers(2**31))
    if method == "pfi":
        vec = permutation_importance(
            probe, dataset.samples, dataset.labels, repeats=config.pfi_repeats, seed=seed
        )
    elif method == "shapley_mc":
        vec = shapley_importance(
            probe,
            dataset.samples,
            dataset.labels,
            permutations=config.shapley_permutations,
            seed=seed,
        )
    else:
        raise ValueError(f"unknown method {method!r}")
    return [dataset.feature_names[i] for i in vec.ranking()]


def run_experiment(config: ExperimentConfig, on_progress=None) -> EvaluationReport:
    """Evaluate every configured (dataset, method, classifier, subset) cell."""
    method_order = [m for m in METHODS if m in config.methods]
    classifier_order = [c for c in CLASSIFIER_KINDS if c in config.classifiers]
    subset_order = [s for s in SUBSETS if s in config.subsets]
    fractions = {"top": config.top_fraction, "bottom": config.bottom_fraction}
    total = len(config.datasets) * len(method_order) * len(classifier_order) * len(subset_order)
    done = 0

    cells: list[ReportCell] = []
    for dataset in config.datasets:
        for method in method_order:
            try:
                ranking = compute_ranking(dataset, method, config)
            except Exception as exc:
                raise HarnessError(
                    f"ranking failed for (dataset={dataset.name}, method={method}): {exc}"
                ) from exc
            name_to_col = {n: i for i, n in enumerate(dataset.feature_names)}
            for classifier in classifier_order:
                for subset in subset_order:
                    names = select_subset(ranking, fractions[subset], subset)
                    cols = [name_to_col[n] for n in names]
                    X = dataset.samples[:, cols]
                    try:
                        iter_means = []
                        for it in range(config.iterations):
                            fold_seed = int(
                                derived_rng(
                                    config.seed, dataset.name, method, classifier, subset, it
                                ).integers(2**31)
                            )
                            spec = ClassifierSpec(kind=classifier, seed=config.seed)
                            cv = stratified_kfold(X, dataset.labels, config.folds, spec, fold_seed)
                            iter_means.append(cv.mean)
                    except Exception as exc:
                        raise HarnessError(
                            f"cell failed (dataset={dataset.name}, method={method}, "
                            f"classifier={classifier}, subset={subset}): {exc}"
                        ) from exc
                    arr = np.array(iter_means)
                    cells.append(
                        ReportCell(
                            dataset=dataset.name,
                            method=method,
                            classifier=classifier,
                            subset=subset,
                            mean=float(arr.mean()),
                            std=float(arr.std()),
                            features=tuple(names),
                        )
                    )
                    done += 1
                    if on_progress is not None:
                        on_progress(done, total)

    averages = tuple(
        {
            "method": method,
            "classifier": classifier,
            "subset": subset,
            "mean": float(
                np.mean(
                    [
                        c.mean
                        for c in cells
                        if (c.method, c.classifier, c.subset) == (method, classifier, subset)
                    ]
                )
            ),
        }
        for method in method_order
        for classifier in classifier_order
        for subset in subset_order
    )
    return EvaluationReport(cells=tuple(cells), averages=averages, config=config.to_dict())


def _format_cell(mean: float, std: float) -> str:
    return f"{100 * mean:.2f}±{100 * std:.2f}%"


def render_report(report: EvaluationReport, format: str = "table") -> str:
    """Render as plain text, markdown, or JSON; all byte-deterministic."""
    if format == "json":
        return json.dumps(report.to_dict(), indent=2)
    if format not in ("table", "markdown"):
        raise ValueError(f"unknown report format: {format!r}")

    methods = list(dict.fromkeys(c.method for c in report.cells))
    classifiers = list(dict.fromkeys(c.classifier for c in report.cells))
    datasets = list(dict.fromkeys(c.dataset for c in report.cells))
    subsets = [s for s in SUBSETS if any(c.subset == s for c in report.cells)]

    header = ["dataset"]
    for subset in subsets:
        for method in methods:
            header.append(f"{method} {subset}")

    blocks: list[str] = []
    for classifier in classifiers:
        rows = [header]
        for dataset in datasets:
            row = [dataset]
            for subset in subsets:
                for method in methods:
                    c = report.cell(dataset, method, classifier, subset)
                    row.append(_format_cell(c.mean, c.std))
            rows.append(row)
        avg_row = ["Average"]
        for subset in subsets:
            for method in methods:
                avg_row.append(f"{100 * report.average(method, classifier, subset):.2f}%")
        rows.append(avg_row)

        widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
        if format == "markdown":
            lines = [f"### {classifier}", ""]
            lines.append("| " + " | ".join(h.ljust(w) for h, w in zip(rows[0], widths)) + " |")
            lines.append("|" + "|".join("-" * (w + 2) for w in widths) + "|")
            for row in rows[1:]:
                lines.append("| " + " | ".join(v.ljust(w) for v, w in zip(row, widths)) + " |")
        else:
            lines = [f"classifier: {classifier}"]
            for row in rows:
                lines.append("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip())
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"
