"""Feature association map: thresholded correlation graph with graded vertices.

Grading rules, applied to the absolute correlation matrix with a zeroed
diagonal (counts are over the other features only):

* grade 3 (high redundancy): at least one correlation >= threshold_high, or
  three or more correlations >= threshold_low;
* grade 1 (low redundancy): no correlation >= threshold_low;
* grade 2 (moderate) otherwise.

The grade-3 test takes precedence. Threshold comparisons allow a small
tolerance (default 0.005, half a unit in the second decimal) so that values
are compared at the precision the thresholds themselves are stated in.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .dataset import Dataset
from .stats import CorrelationMatrix, correlation_matrix

DEFAULT_THRESHOLD_LOW = 0.67
DEFAULT_THRESHOLD_HIGH = 0.9
THRESHOLD_TOLERANCE = 0.005

GRADE_COLORS = {1: "green", 2: "yellow", 3: "red"}


@dataclass(frozen=True)
class FamVertex:
    index: int
    name: str
    grade: int
    color: str


@dataclass(frozen=True)
class FamEdge:
    source: int
    target: int
    weight: float


@dataclass(frozen=True)
class FamGraph:
    vertices: tuple[FamVertex, ...]
    edges: tuple[FamEdge, ...]
    threshold_low: float
    threshold_high: float

    def degree(self, index: int) -> int:
        return sum(1 for e in self.edges if index in (e.source, e.target))

    def grades(self) -> list[int]:
        return [v.grade for v in self.vertices]


def _as_matrix(corr) -> np.ndarray:
    m = corr.values if isinstance(corr, CorrelationMatrix) else np.asarray(corr, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"correlation matrix must be square, got shape {m.shape}")
    if not np.allclose(m, m.T, atol=1e-12):
        raise ValueError("correlation matrix must be symmetric")
    return m


def grade_features(
    corr,
    threshold_low: float = DEFAULT_THRESHOLD_LOW,
    threshold_high: float = DEFAULT_THRESHOLD_HIGH,
    tolerance: float = THRESHOLD_TOLERANCE,
) -> list[int]:
    """Similarity grade (1/2/3) per feature from a zeroed-diagonal |r| matrix."""
    m = _as_matrix(corr)
    if np.any(np.diagonal(m) != 0.0):
        raise ValueError("grade_features expects a zeroed diagonal")
    meets_low = m >= (threshold_low - tolerance)
    meets_high = m >= (threshold_high - tolerance)
    grades = []
    for i in range(m.shape[0]):
        c_lo = int(meets_low[i].sum())
        c_hi = int(meets_high[i].sum())
        if c_hi >= 1 or c_lo >= 3:
            grades.append(3)
        elif c_lo == 0:
            grades.append(1)
        else:
            grades.append(2)
    return grades


def build_fam_graph(
    dataset: Dataset,
    threshold_low: float = DEFAULT_THRESHOLD_LOW,
    threshold_high: float = DEFAULT_THRESHOLD_HIGH,
    tolerance: float = THRESHOLD_TOLERANCE,
) -> FamGraph:
    """Compute |correlations|, zero the diagonal, threshold edges, grade vertices."""
    corr = correlation_matrix(dataset)
    m = corr.values.copy()
    np.fill_diagonal(m, 0.0)
    grades = grade_features(m, threshold_low, threshold_high, tolerance)
    vertices = tuple(
        FamVertex(index=i, name=name, grade=grades[i], color=GRADE_COLORS[grades[i]])
        for i, name in enumerate(dataset.feature_names)
    )
    edges = tuple(
        FamEdge(source=i, target=j, weight=float(m[i, j]))
        for i in range(m.shape[0])
        for j in range(i + 1, m.shape[0])
        if m[i, j] >= threshold_low - tolerance
    )
    return FamGraph(
        vertices=vertices,
        edges=edges,
        threshold_low=threshold_low,
        threshold_high=threshold_high,
    )


def graph_to_dict(graph: FamGraph) -> dict:
    return {
        "features": [
            {"index": v.index, "name": v.name, "grade": v.grade, "color": v.color}
            for v in graph.vertices
        ],
        "edges": [
            {"source": e.source, "target": e.target, "weight": e.weight} for e in graph.edges
        ],
        "thresholds": {"low": graph.threshold_low, "high": graph.threshold_high},
    }


def graph_from_json(text: str) -> FamGraph:
    """Inverse of export_graph(..., "json")."""
    payload = json.loads(text)
    vertices = tuple(
        FamVertex(index=f["index"], name=f["name"], grade=f["grade"], color=f["color"])
        for f in payload["features"]
    )
    edges = tuple(
        FamEdge(source=e["source"], target=e["target"], weight=e["weight"])
        for e in payload["edges"]
    )
    return FamGraph(
        vertices=vertices,
        edges=edges,
        threshold_low=payload["thresholds"]["low"],
        threshold_high=payload["thresholds"]["high"],
    )


def export_graph(graph: FamGraph, format: str = "dot") -> str:
    """Serialize the graph as graphviz DOT or JSON text, byte-deterministically."""
    if format == "json":
        return json.dumps(graph_to_dict(graph), indent=2)
    if format == "dot":
        lines = ["graph fam {", "  node [style=filled];"]
        for v in graph.vertices:
            lines.append(f'  {v.index} [label="{v.name}", fillcolor={v.color}];')
        for e in graph.edges:
            lines.append(f'  {e.source} -- {e.target} [label="{e.weight:.3f}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown graph format: {format!r}")
