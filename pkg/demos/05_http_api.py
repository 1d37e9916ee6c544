"""Drive the HTTP API end to end: upload, score, graph, evaluate, poll.

Starts the bundled server on a local port in a background thread, then talks
to it the same way the web UI does.

Run: python demos/05_http_api.py
"""
import threading
import time
from pathlib import Path

import requests
import uvicorn

from famex.server import create_app

DATA = Path(__file__).parent.parent / "data"
PORT = 8765
BASE = f"http://127.0.0.1:{PORT}"


def start_server() -> uvicorn.Server:
    server = uvicorn.Server(uvicorn.Config(create_app(), host="127.0.0.1", port=PORT, log_level="error"))
    threading.Thread(target=server.run, daemon=True).start()
    while not server.started:
        time.sleep(0.05)
    return server


def main():
    print("=" * 72)
    print("HTTP API walkthrough")
    print("=" * 72)
    server = start_server()
    print(f"\nserver up at {BASE}")

    csv_bytes = (DATA / "wisconsin.csv").read_bytes()
    up = requests.post(f"{BASE}/api/datasets", data=csv_bytes, params={"name": "wisconsin"})
    up.raise_for_status()
    session = up.json()
    print(f"\nPOST /api/datasets -> id={session['id']}")
    print(f"  rows={session['rows']}, dropped={session['dropped_rows']}, "
          f"features={len(session['features'])}")

    scores = requests.get(f"{BASE}/api/datasets/{session['id']}/scores").json()
    print("\nGET .../scores (top 3 by importance):")
    for r in scores[:3]:
        print(f"  #{r['rank']} {r['name']}: importance={r['importance_score']:.3f} "
              f"grade={r['grade']}")

    graph = requests.get(f"{BASE}/api/datasets/{session['id']}/graph").json()
    counts = {}
    for f in graph["features"]:
        counts[f["color"]] = counts.get(f["color"], 0) + 1
    print(f"\nGET .../graph -> {len(graph['features'])} vertices "
          f"({counts}), {len(graph['edges'])} edges")

    job = requests.post(
        f"{BASE}/api/datasets/{session['id']}/evaluate",
        json={"classifiers": ["naive_bayes"], "folds": 5, "iters": 2},
    ).json()
    print(f"\nPOST .../evaluate -> job {job['job_id']}")
    while True:
        status = requests.get(f"{BASE}/api/jobs/{job['job_id']}").json()
        print(f"  status={status['status']} progress={status['progress']}")
        if status["status"] in ("done", "error"):
            break
        time.sleep(0.3)

    for cell in status["result"]["cells"]:
        print(f"  {cell['subset']:<7} acc={100 * cell['mean']:.2f}% features={cell['features']}")

    server.should_exit = True
    print("\ndone; server stopped")


if __name__ == "__main__":
    main()
