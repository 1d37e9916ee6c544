"""Tabular dataset ingestion: CSV loading, validation, and discretization."""
from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np


class DataError(ValueError):
    """Raised for malformed or unusable input data."""


@dataclass(frozen=True)
class Dataset:
    """A numeric feature matrix with categorical class labels.

    samples is an (m, n) float array; labels holds the m class values as
    strings; feature_names has one unique name per column.
    """

    name: str
    feature_names: tuple[str, ...]
    samples: np.ndarray
    labels: tuple[str, ...]
    n_dropped: int = 0

    def __post_init__(self):
        m, n = self.samples.shape
        if n < 2:
            raise DataError(f"need at least 2 features, got {n}")
        if m < 2:
            raise DataError(f"need at least 2 rows, got {m}")
        if len(self.labels) != m:
            raise DataError(f"{len(self.labels)} labels for {m} rows")
        if len(self.feature_names) != n:
            raise DataError(f"{len(self.feature_names)} names for {n} columns")
        if len(set(self.feature_names)) != n:
            raise DataError("feature names are not unique")
        if self.class_count < 2:
            raise DataError("labels contain fewer than 2 distinct classes")

    @property
    def n_features(self) -> int:
        return self.samples.shape[1]

    @property
    def n_rows(self) -> int:
        return self.samples.shape[0]

    @property
    def class_count(self) -> int:
        return len(set(self.labels))

    def class_distribution(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for lab in self.labels:
            out[lab] = out.get(lab, 0) + 1
        return dict(sorted(out.items()))


@dataclass(frozen=True)
class DiscretizedColumn:
    """Equal-width binning of one numeric column."""

    bin_indices: np.ndarray
    bin_count: int
    bin_edges: np.ndarray = field(repr=False)


def _resolve_class_column(header: list[str], class_column: str | int | None) -> int:
    if class_column is None:
        return len(header) - 1
    if isinstance(class_column, int) or (isinstance(class_column, str) and class_column.lstrip("-").isdigit()):
        idx = int(class_column)
        if idx < 0:
            idx += len(header)
        if not 0 <= idx < len(header):
            raise DataError(f"class column index {class_column} out of range for {len(header)} columns")
        return idx
    matches = [i for i, h in enumerate(header) if h == class_column]
    if not matches:
        raise DataError(f"class column {class_column!r} not found in header {header}")
    if len(matches) > 1:
        raise DataError(f"class column {class_column!r} is ambiguous")
    return matches[0]


def load_csv(
    path: str | Path,
    class_column: str | int | None = None,
    drop_missing: bool = True,
    missing_sentinel: str = "?",
    name: str | None = None,
) -> Dataset:
    """Load a delimited text file with a header row into a Dataset.

    The class column (default: last) is removed from the feature matrix and
    kept as labels. Rows with empty or sentinel-valued cells are dropped when
    drop_missing is set, otherwise they raise. Non-numeric feature cells are a
    parse error reported with their row/column location.
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"no such file: {path}")

    with path.open(newline="", encoding="utf-8-sig") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise DataError(f"{path}: empty file") from None
        raw_rows = [row for row in reader if row and any(cell.strip() for cell in row)]

    header = [h.strip() for h in header]
    class_idx = _resolve_class_column(header, class_column)
    feature_names = tuple(h for i, h in enumerate(header) if i != class_idx)
    if len(feature_names) < 2:
        raise DataError(f"{path}: fewer than 2 feature columns after removing the class column")

    samples: list[list[float]] = []
    labels: list[str] = []
    n_dropped = 0
    for row_no, row in enumerate(raw_rows, start=2):  # header is line 1
        if len(row) != len(header):
            raise DataError(f"{path}: row {row_no} has {len(row)} cells, expected {len(header)}")
        cells = [c.strip() for c in row]
        missing = [i for i, c in enumerate(cells) if c == "" or c == missing_sentinel]
        if missing:
            if drop_missing:
                n_dropped += 1
                continue
            raise DataError(
                f"{path}: missing value at row {row_no}, column {header[missing[0]]!r}"
            )
        values = []
        for i, cell in enumerate(cells):
            if i == class_idx:
                continue
            try:
                value = float(cell)
            except ValueError:
                raise DataError(
                    f"{path}: non-numeric value {cell!r} at row {row_no}, column {header[i]!r}"
                ) from None
            if not np.isfinite(value):
                raise DataError(
                    f"{path}: non-finite value {cell!r} at row {row_no}, column {header[i]!r}"
                )
            values.append(value)
        samples.append(values)
        labels.append(cells[class_idx])

    if len(set(labels)) < 2:
        raise DataError(f"{path}: fewer than 2 distinct classes in column {header[class_idx]!r}")

    return Dataset(
        name=name if name is not None else path.stem,
        feature_names=feature_names,
        samples=np.asarray(samples, dtype=np.float64),
        labels=tuple(labels),
        n_dropped=n_dropped,
    )


def discretize(column, bin_count: int = 10) -> DiscretizedColumn:
    """Bin a numeric column into bin_count equal-width bins over [min, max].

    Values equal to the maximum fall in the last bin. A constant column
    collapses to a single bin regardless of bin_count.
    """
    col = np.asarray(column, dtype=np.float64)
    if col.ndim != 1:
        raise DataError("discretize expects a 1-d column")
    if col.size == 0:
        raise DataError("cannot discretize an empty column")
    if bin_count < 1:
        raise DataError(f"bin_count must be >= 1, got {bin_count}")

    lo, hi = float(col.min()), float(col.max())
    if lo == hi:
        return DiscretizedColumn(
            bin_indices=np.zeros(col.size, dtype=np.intp),
            bin_count=1,
            bin_edges=np.array([lo, hi]),
        )
    edges = np.linspace(lo, hi, bin_count + 1)
    idx = np.floor((col - lo) / (hi - lo) * bin_count).astype(np.intp)
    np.clip(idx, 0, bin_count - 1, out=idx)
    return DiscretizedColumn(bin_indices=idx, bin_count=bin_count, bin_edges=edges)
