"""Command-line interface: score, graph, evaluate, compare, serve."""
from __future__ import annotations

import argparse
import json
import sys

from .dataset import DataError, load_csv
from .fam import DEFAULT_THRESHOLD_HIGH, DEFAULT_THRESHOLD_LOW, build_fam_graph, export_graph
from .harness import METHODS, ExperimentConfig, HarnessError, render_report, run_experiment
from .models import CLASSIFIER_KINDS
from .scoring import famex

DEFAULT_SEED = 42


def _add_dataset_args(p: argparse.ArgumentParser, many: bool = False):
    if many:
        p.add_argument("datasets", nargs="+", help="CSV dataset path(s)")
    else:
        p.add_argument("dataset", help="CSV dataset path")
    p.add_argument("--class-col", default=None, help="class column name or index (default: last)")
    p.add_argument("--missing", default="?", help="missing-value sentinel (default: '?')")


def _add_common_args(p: argparse.ArgumentParser):
    p.add_argument("--bins", type=int, default=10, help="discretization bin count (default 10)")
    p.add_argument(
        "--thresholds",
        default=f"{DEFAULT_THRESHOLD_LOW},{DEFAULT_THRESHOLD_HIGH}",
        help="low,high correlation thresholds (default 0.67,0.9)",
    )
    p.add_argument("--format", choices=("table", "json", "markdown"), default="table")
    p.add_argument("--out", default=None, help="write output to a file instead of stdout")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="master seed (default 42)")


def _add_harness_args(p: argparse.ArgumentParser):
    p.add_argument("--top", type=float, default=0.3, help="top fraction (default 0.3)")
    p.add_argument("--bottom", type=float, default=0.3, help="bottom fraction (default 0.3)")
    p.add_argument(
        "--classifiers",
        default=",".join(CLASSIFIER_KINDS),
        help=f"comma list from {{{','.join(CLASSIFIER_KINDS)}}} (default: all)",
    )
    p.add_argument("--folds", type=int, default=10)
    p.add_argument("--iters", type=int, default=10)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="famex", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("score", help="feature importance scores for a dataset")
    _add_dataset_args(p)
    _add_common_args(p)

    p = sub.add_parser("graph", help="export the feature association map")
    _add_dataset_args(p)
    p.add_argument(
        "--thresholds",
        default=f"{DEFAULT_THRESHOLD_LOW},{DEFAULT_THRESHOLD_HIGH}",
        help="low,high correlation thresholds (default 0.67,0.9)",
    )
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--out", default=None)

    p = sub.add_parser("evaluate", help="top/bottom subset accuracy for one method")
    _add_dataset_args(p, many=True)
    p.add_argument("--method", choices=METHODS, default="famex")
    _add_harness_args(p)
    _add_common_args(p)

    p = sub.add_parser("compare", help="top/bottom subset accuracy for all methods")
    _add_dataset_args(p, many=True)
    _add_harness_args(p)
    _add_common_args(p)

    p = sub.add_parser("serve", help="run the HTTP API (and UI, when built)")
    p.add_argument("--port", type=int, default=8080)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--ui-dir", default=None, help="directory of static UI assets to serve at /")
    return parser


def _parse_thresholds(text: str) -> tuple[float, float]:
    try:
        lo, hi = (float(v) for v in text.split(","))
    except ValueError:
        raise DataError(f"--thresholds expects 'low,high', got {text!r}") from None
    return lo, hi


def _emit(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _scores_table(records: list[dict]) -> str:
    header = ["rank", "name", "grade", "similarity", "relevance", "rel_score", "importance"]
    rows = [header] + [
        [
            str(r["rank"]),
            r["name"],
            str(r["grade"]),
            f"{r['similarity_score']:.4f}",
            f"{r['relevance']:.4f}",
            f"{r['relevance_score']:.4f}",
            f"{r['importance_score']:.4f}",
        ]
        for r in records
    ]
    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    return "\n".join("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip() for row in rows)


def _run(args: argparse.Namespace) -> int:
    if args.command == "score":
        ds = load_csv(args.dataset, class_column=args.class_col, missing_sentinel=args.missing)
        scores = famex(ds, bin_count=args.bins, thresholds=_parse_thresholds(args.thresholds))
        records = scores.to_records()
        if args.format == "json":
            _emit(json.dumps(records, indent=2), args.out)
        elif args.format == "markdown":
            lines = ["| rank | name | grade | importance |", "|---|---|---|---|"]
            lines += [
                f"| {r['rank']} | {r['name']} | {r['grade']} | {r['importance_score']:.4f} |"
                for r in records
            ]
            _emit("\n".join(lines), args.out)
        else:
            _emit(_scores_table(records), args.out)
        return 0

    if args.command == "graph":
        ds = load_csv(args.dataset, class_column=args.class_col, missing_sentinel=args.missing)
        lo, hi = _parse_thresholds(args.thresholds)
        graph = build_fam_graph(ds, lo, hi)
        _emit(export_graph(graph, args.format), args.out)
        return 0

    if args.command in ("evaluate", "compare"):
        datasets = tuple(
            load_csv(path, class_column=args.class_col, missing_sentinel=args.missing)
            for path in args.datasets
        )
        methods = (args.method,) if args.command == "evaluate" else METHODS
        config = ExperimentConfig(
            datasets=datasets,
            methods=methods,
            classifiers=tuple(args.classifiers.split(",")),
            top_fraction=args.top,
            bottom_fraction=args.bottom,
            folds=args.folds,
            iterations=args.iters,
            seed=args.seed,
            bin_count=args.bins,
            thresholds=_parse_thresholds(args.thresholds),
        )
        report = run_experiment(config)
        _emit(render_report(report, args.format), args.out)
        return 0

    if args.command == "serve":
        # imported lazily so the core CLI works without the server extra
        import uvicorn

        from .server import create_app

        app = create_app(static_dir=args.ui_dir)
        uvicorn.run(app, host=args.host, port=args.port, log_level="info")
        return 0

    raise AssertionError(f"unhandled command {args.command!r}")


def run_cli(argv: list[str] | None = None) -> int:
    """Parse argv and execute; returns the process exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except (DataError, HarnessError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main():  # console_scripts entry point
    raise SystemExit(run_cli())


if __name__ == "__main__":
    main()
