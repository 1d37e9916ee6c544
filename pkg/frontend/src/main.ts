/** Wiring: upload, parameter panel, and the three coordinated views. */

import { fetchGraph, fetchScores, pollJob, startEvaluate, uploadDataset } from "./api";
import { renderGraph } from "./graph";
import { renderReport } from "./report";
import { highlightCount, LatestOnly, paramsKey } from "./state";
import { DEFAULT_SORT, renderScoreTable, type SortState } from "./table";
import {
  ALL_CLASSIFIERS,
  DEFAULT_PARAMS,
  type FamGraph,
  type Params,
  type Report,
  type ScoreRecord,
  type UploadSummary,
} from "./types";

const app = {
  session: null as UploadSummary | null,
  params: { ...DEFAULT_PARAMS },
  scores: null as ScoreRecord[] | null,
  graph: null as FamGraph | null,
  report: null as Report | null,
  sort: { ...DEFAULT_SORT } as SortState,
  scoresGate: new LatestOnly<ScoreRecord[]>(),
  graphGate: new LatestOnly<FamGraph>(),
};

function $(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node;
}

function showError(message: string): void {
  const banner = $("error-banner");
  banner.textContent = message;
  banner.classList.remove("hidden");
}

function clearError(): void {
  $("error-banner").classList.add("hidden");
}

function topNames(): Set<string> {
  if (!app.scores) return new Set();
  const k = highlightCount(app.scores.length, app.params.topFraction);
  const byRank = [...app.scores].sort((a, b) => a.rank - b.rank);
  return new Set(byRank.slice(0, k).map((r) => r.name));
}

function redrawViews(): void {
  const highlighted = topNames();
  if (app.scores) {
    renderScoreTable($("score-table") as HTMLElement, app.scores, highlighted, app.sort, (column) => {
      app.sort =
        app.sort.column === column
          ? { column, descending: !app.sort.descending }
          : { column, descending: true };
      redrawViews();
    });
    $("highlight-note").textContent =
      `${highlighted.size} of ${app.scores.length} features in the top slice`;
  }
  if (app.graph) {
    const byName = new Map((app.scores ?? []).map((r) => [r.name, r]));
    renderGraph($("fam-graph") as unknown as SVGSVGElement, app.graph, highlighted, byName);
  }
  renderReport($("report") as HTMLElement, app.report);
}

async function refreshAnalysis(): Promise<void> {
  if (!app.session) return;
  clearError();
  const sid = app.session.id;
  const key = paramsKey(app.params, sid);
  const snapshot = { ...app.params, classifiers: [...app.params.classifiers] };
  try {
    await Promise.all([
      app.scoresGate.run(key, () => fetchScores(sid, snapshot), (scores) => {
        app.scores = scores;
      }),
      app.graphGate.run(key, () => fetchGraph(sid, snapshot), (graph) => {
        app.graph = graph;
      }),
    ]);
    redrawViews();
  } catch (err) {
    showError(String(err instanceof Error ? err.message : err));
  }
}

function readParams(): Params {
  const num = (id: string) => Number(($(id) as HTMLInputElement).value);
  const classifiers = ALL_CLASSIFIERS.filter(
    (kind) => ($(`clf-${kind}`) as HTMLInputElement).checked,
  );
  return {
    bins: num("param-bins"),
    thresholdLow: num("param-threshold-low"),
    thresholdHigh: num("param-threshold-high"),
    topFraction: num("param-top"),
    bottomFraction: num("param-bottom"),
    classifiers,
    folds: num("param-folds"),
    iters: num("param-iters"),
    seed: num("param-seed"),
  };
}

function onParamsChanged(): void {
  app.params = readParams();
  $("top-value").textContent = app.params.topFraction.toFixed(2);
  $("bottom-value").textContent = app.params.bottomFraction.toFixed(2);
  void refreshAnalysis();
}

async function onUpload(): Promise<void> {
  const input = $("file-input") as HTMLInputElement;
  const file = input.files?.[0];
  if (!file) {
    showError("pick a CSV file first");
    return;
  }
  clearError();
  const classCol = ($("param-class-col") as HTMLInputElement).value.trim() || null;
  try {
    app.session = await uploadDataset(file, classCol);
    app.scores = null;
    app.graph = null;
    app.report = null;
    const s = app.session;
    $("dataset-summary").textContent =
      `${s.name}: ${s.rows} rows (${s.dropped_rows} dropped), ` +
      `${s.features.length} features, classes ${JSON.stringify(s.class_distribution)}`;
    await refreshAnalysis();
  } catch (err) {
    showError(String(err instanceof Error ? err.message : err));
  }
}

async function onEvaluate(): Promise<void> {
  if (!app.session) {
    showError("upload a dataset first");
    return;
  }
  if (app.params.classifiers.length === 0) {
    showError("pick at least one classifier");
    return;
  }
  clearError();
  const button = $("evaluate-button") as HTMLButtonElement;
  button.disabled = true;
  const progress = $("job-progress");
  try {
    const jobId = await startEvaluate(app.session.id, app.params);
    const report = await pollJob(jobId, (status) => {
      progress.textContent =
        status.status === "running" || status.status === "queued"
          ? `evaluating… ${status.progress.done}/${status.progress.total || "?"} cells`
          : "";
    });
    app.report = report;
    progress.textContent = "";
    redrawViews();
  } catch (err) {
    progress.textContent = "";
    showError(String(err instanceof Error ? err.message : err));
  } finally {
    button.disabled = false;
  }
}

export function init(): void {
  $("upload-button").addEventListener("click", () => void onUpload());
  $("evaluate-button").addEventListener("click", () => void onEvaluate());
  for (const id of [
    "param-bins",
    "param-threshold-low",
    "param-threshold-high",
    "param-top",
    "param-bottom",
    "param-folds",
    "param-iters",
    "param-seed",
  ]) {
    $(id).addEventListener("change", onParamsChanged);
    $(id).addEventListener("input", onParamsChanged);
  }
  for (const kind of ALL_CLASSIFIERS) {
    $(`clf-${kind}`).addEventListener("change", onParamsChanged);
  }
  renderReport($("report") as HTMLElement, null);
}

if (typeof document !== "undefined" && document.getElementById("app-root")) {
  init();
}
