/** Thin typed client for the HTTP API. */

import type { JobStatus, Params, UploadSummary } from "./types";
import { validateGraph, validateReport, validateScores } from "./validate";
import type { FamGraph, Report, ScoreRecord } from "./types";

async function expectOk(resp: Response): Promise<unknown> {
  if (!resp.ok) {
    let detail = `${resp.status}`;
    try {
      const body = (await resp.json()) as { detail?: string };
      if (body.detail) detail = `${resp.status}: ${body.detail}`;
    } catch {
      // non-JSON error body; keep the status code
    }
    throw new Error(detail);
  }
  return resp.json();
}

async function readFileText(file: File): Promise<string> {
  if (typeof file.text === "function") return file.text();
  // FileReader fallback for environments without Blob.text()
  return new Promise((resolve, reject) => {
    const reader = new FileReader();
    reader.onload = () => resolve(String(reader.result));
    reader.onerror = () => reject(reader.error ?? new Error("could not read file"));
    reader.readAsText(file);
  });
}

export async function uploadDataset(file: File, classCol: string | null): Promise<UploadSummary> {
  const params = new URLSearchParams({ name: file.name.replace(/\.csv$/i, "") });
  if (classCol) params.set("class_col", classCol);
  const resp = await fetch(`/api/datasets?${params}`, {
    method: "POST",
    headers: { "content-type": "text/csv" },
    body: await readFileText(file),
  });
  return (await expectOk(resp)) as UploadSummary;
}

export async function fetchScores(sessionId: string, params: Params): Promise<ScoreRecord[]> {
  const q = new URLSearchParams({
    bins: String(params.bins),
    thresholds: `${params.thresholdLow},${params.thresholdHigh}`,
  });
  return validateScores(await expectOk(await fetch(`/api/datasets/${sessionId}/scores?${q}`)));
}

export async function fetchGraph(sessionId: string, params: Params): Promise<FamGraph> {
  const q = new URLSearchParams({ thresholds: `${params.thresholdLow},${params.thresholdHigh}` });
  return validateGraph(await expectOk(await fetch(`/api/datasets/${sessionId}/graph?${q}`)));
}

export async function startEvaluate(sessionId: string, params: Params): Promise<string> {
  const resp = await fetch(`/api/datasets/${sessionId}/evaluate`, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify({
      classifiers: params.classifiers,
      top_fraction: params.topFraction,
      bottom_fraction: params.bottomFraction,
      folds: params.folds,
      iters: params.iters,
      seed: params.seed,
      bins: params.bins,
      thresholds: `${params.thresholdLow},${params.thresholdHigh}`,
    }),
  });
  const body = (await expectOk(resp)) as { job_id: string };
  return body.job_id;
}

export async function fetchJob(jobId: string): Promise<JobStatus> {
  const status = (await expectOk(await fetch(`/api/jobs/${jobId}`))) as JobStatus;
  if (status.status === "done") validateReport(status.result);
  return status;
}

export async function pollJob(
  jobId: string,
  onProgress: (status: JobStatus) => void,
  intervalMs = 500,
): Promise<Report> {
  for (;;) {
    const status = await fetchJob(jobId);
    onProgress(status);
    if (status.status === "done") return status.result as Report;
    if (status.status === "error") throw new Error(status.error ?? "evaluation failed");
    await new Promise((resolve) => setTimeout(resolve, intervalMs));
  }
}
