import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))  # make `oracles` importable

from famex import Dataset

DATA_DIR = Path(__file__).parent.parent / "data"

# one line per acceptance criterion, printed after the run
ACCEPTANCE_RESULTS: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def wisconsin_path() -> Path:
    return DATA_DIR / "wisconsin.csv"


@pytest.fixture(scope="session")
def pima_path() -> Path:
    return DATA_DIR / "pima.csv"


@pytest.fixture(scope="session")
def winequality_path() -> Path:
    return DATA_DIR / "winequality_red.csv"


def make_dataset(X, y, name="synthetic") -> Dataset:
    X = np.asarray(X, dtype=np.float64)
    return Dataset(
        name=name,
        feature_names=tuple(f"f{i}" for i in range(X.shape[1])),
        samples=X,
        labels=tuple(str(v) for v in y),
    )


def planted_signal_dataset(
    n_signal=3, n_noise=7, m=300, seed=7, name="planted"
) -> Dataset:
    """Binary labels driven by the first n_signal features; the rest is noise."""
    rng = np.random.default_rng(seed)
    y = rng.integers(0, 2, size=m)
    signal = y[:, None] * 2.0 + rng.normal(0, 0.6, size=(m, n_signal))
    noise = rng.normal(0, 1.0, size=(m, n_noise))
    return make_dataset(np.hstack([signal, noise]), y, name=name)


@pytest.fixture()
def planted() -> Dataset:
    return planted_signal_dataset()


def write_csv(path: Path, header, rows):
    lines = [",".join(header)]
    lines += [",".join(str(v) for v in row) for row in rows]
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


@pytest.fixture()
def tiny_csv(tmp_path) -> Path:
    """20 rows, 3 features + class; f0 tracks the class, f1/f2 are noise."""
    rng = np.random.default_rng(0)
    rows = []
    for i in range(20):
        label = i % 2
        rows.append(
            [
                round(label * 2 + rng.normal(0, 0.2), 4),
                round(rng.normal(0, 1), 4),
                round(rng.normal(0, 1), 4),
                label,
            ]
        )
    return write_csv(tmp_path / "tiny.csv", ["a", "b", "c", "y"], rows)
