"""HTTP API wrapping scoring, graph export, and evaluation for the companion UI.

Sessions are in-memory and keyed by content hash, so re-uploading the same
bytes is idempotent. Every response is a pure function of (uploaded bytes,
parameters), which makes caching safe: results are memoized per parameter
hash and computed at most once (single-flight). Evaluation runs on a small
worker pool and is polled through /api/jobs/{id}.
"""
from __future__ import annotations

import hashlib
import json
import tempfile
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, HTTPException, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .dataset import DataError, Dataset, load_csv
from .fam import DEFAULT_THRESHOLD_HIGH, DEFAULT_THRESHOLD_LOW, build_fam_graph, graph_to_dict
from .harness import METHODS, ExperimentConfig, run_experiment
from .models import CLASSIFIER_KINDS
from .scoring import famex

MAX_BODY_BYTES = 32 * 1024 * 1024
SESSION_TTL_SECONDS = 3600.0


@dataclass
class _Session:
    dataset: Dataset
    last_access: float


@dataclass
class _Job:
    status: str = "queued"  # queued | running | done | error
    done: int = 0
    total: int = 0
    result: dict | None = None
    error: str | None = None


@dataclass
class SessionStore:
    ttl: float = SESSION_TTL_SECONDS
    sessions: dict[str, _Session] = field(default_factory=dict)
    cache: dict[str, object] = field(default_factory=dict)
    jobs: dict[str, _Job] = field(default_factory=dict)
    lock: threading.Lock = field(default_factory=threading.Lock)
    flight_locks: dict[str, threading.Lock] = field(default_factory=dict)

    def put(self, session_id: str, dataset: Dataset):
        with self.lock:
            self._evict()
            self.sessions[session_id] = _Session(dataset=dataset, last_access=time.monotonic())

    def get(self, session_id: str) -> Dataset:
        with self.lock:
            self._evict()
            session = self.sessions.get(session_id)
            if session is None:
                raise KeyError(session_id)
            session.last_access = time.monotonic()
            return session.dataset

    def _evict(self):
        now = time.monotonic()
        for sid in [s for s, v in self.sessions.items() if now - v.last_access > self.ttl]:
            del self.sessions[sid]

    def compute_once(self, key: str, fn):
        """Memoize fn() under key; concurrent callers share one computation."""
        with self.lock:
            if key in self.cache:
                return self.cache[key]
            flight = self.flight_locks.setdefault(key, threading.Lock())
        with flight:
            with self.lock:
                if key in self.cache:
                    return self.cache[key]
            value = fn()
            with self.lock:
                self.cache[key] = value
            return value


def _parse_thresholds(text: str | None) -> tuple[float, float]:
    if not text:
        return (DEFAULT_THRESHOLD_LOW, DEFAULT_THRESHOLD_HIGH)
    try:
        lo, hi = (float(v) for v in text.split(","))
    except ValueError:
        raise HTTPException(422, f"thresholds expects 'low,high', got {text!r}") from None
    return lo, hi


def create_app(
    static_dir: str | Path | None = None,
    max_body: int = MAX_BODY_BYTES,
    workers: int = 2,
) -> FastAPI:
    app = FastAPI(title="famex")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    store = SessionStore()
    pool = ThreadPoolExecutor(max_workers=workers)
    app.state.store = store

    @app.exception_handler(DataError)
    async def _data_error(_request, exc: DataError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.post("/api/datasets")
    async def upload_dataset(request: Request, class_col: str | None = None, name: str | None = None):
        body = await request.body()
        if len(body) > max_body:
            raise HTTPException(413, f"body exceeds {max_body} bytes")
        if not body.strip():
            raise HTTPException(400, "empty body")
        session_id = hashlib.sha256(body + (class_col or "").encode()).hexdigest()[:16]
        with tempfile.NamedTemporaryFile("wb", suffix=".csv", delete=False) as tmp:
            tmp.write(body)
            tmp_path = Path(tmp.name)
        try:
            dataset = load_csv(tmp_path, class_column=class_col, name=name or "upload")
        except UnicodeDecodeError as exc:
            raise HTTPException(400, f"body is not valid UTF-8: {exc}") from None
        finally:
            tmp_path.unlink(missing_ok=True)
        store.put(session_id, dataset)
        return {
            "id": session_id,
            "name": dataset.name,
            "features": list(dataset.feature_names),
            "rows": dataset.n_rows,
            "dropped_rows": dataset.n_dropped,
            "class_distribution": dataset.class_distribution(),
        }

    def _dataset_or_404(session_id: str) -> Dataset:
        try:
            return store.get(session_id)
        except KeyError:
            raise HTTPException(404, f"unknown session {session_id!r}") from None

    @app.get("/api/datasets/{session_id}/scores")
    def get_scores(session_id: str, bins: int = 10, thresholds: str | None = None):
        dataset = _dataset_or_404(session_id)
        lo, hi = _parse_thresholds(thresholds)
        if bins < 1:
            raise HTTPException(422, f"bins must be >= 1, got {bins}")
        key = f"scores:{session_id}:{bins}:{lo}:{hi}"
        return store.compute_once(
            key, lambda: famex(dataset, bin_count=bins, thresholds=(lo, hi)).to_records()
        )

    @app.get("/api/datasets/{session_id}/graph")
    def get_graph(session_id: str, thresholds: str | None = None):
        dataset = _dataset_or_404(session_id)
        lo, hi = _parse_thresholds(thresholds)
        key = f"graph:{session_id}:{lo}:{hi}"
        return store.compute_once(key, lambda: graph_to_dict(build_fam_graph(dataset, lo, hi)))

    @app.post("/api/datasets/{session_id}/evaluate")
    async def start_evaluate(session_id: str, request: Request):
        dataset = _dataset_or_404(session_id)
        try:
            params = json.loads((await request.body()) or b"{}")
        except json.JSONDecodeError as exc:
            raise HTTPException(422, f"invalid JSON body: {exc}") from None
        thresholds = params.get("thresholds")
        if isinstance(thresholds, str):
            thresholds = _parse_thresholds(thresholds)
        try:
            config = ExperimentConfig(
                datasets=(dataset,),
                methods=tuple(params.get("methods", ("famex",))),
                classifiers=tuple(params.get("classifiers", CLASSIFIER_KINDS)),
                top_fraction=float(params.get("top_fraction", 0.3)),
                bottom_fraction=float(params.get("bottom_fraction", 0.3)),
                folds=int(params.get("folds", 10)),
                iterations=int(params.get("iters", 10)),
                seed=int(params.get("seed", 42)),
                bin_count=int(params.get("bins", 10)),
                thresholds=tuple(thresholds) if thresholds else (DEFAULT_THRESHOLD_LOW, DEFAULT_THRESHOLD_HIGH),
            )
        except (TypeError, ValueError) as exc:
            raise HTTPException(422, str(exc)) from None

        job_id = hashlib.sha256(
            (session_id + json.dumps(config.to_dict(), sort_keys=True)).encode()
        ).hexdigest()[:16]
        with store.lock:
            job = store.jobs.get(job_id)
            if job is None:
                job = _Job()
                store.jobs[job_id] = job
                submit = True
            else:
                submit = False  # identical params: share the existing job
        if submit:
            def run():
                job.status = "running"
                try:
                    def progress(done, total):
                        job.done, job.total = done, total

                    report = run_experiment(config, on_progress=progress)
                    job.result = report.to_dict()
                    job.status = "done"
                except Exception as exc:  # surfaced via the job status
                    job.error = str(exc)
                    job.status = "error"

            pool.submit(run)
        return JSONResponse(status_code=202, content={"job_id": job_id})

    @app.get("/api/jobs/{job_id}")
    def get_job(job_id: str):
        job = store.jobs.get(job_id)
        if job is None:
            raise HTTPException(404, f"unknown job {job_id!r}")
        payload: dict = {
            "id": job_id,
            "status": job.status,
            "progress": {"done": job.done, "total": job.total},
        }
        if job.status == "done":
            payload["result"] = job.result
        if job.status == "error":
            payload["error"] = job.error
        return payload

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")

    return app
