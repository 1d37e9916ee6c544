/** Schema guards: a malformed payload raises and nothing partial renders. */

import type { FamGraph, Report, ScoreRecord } from "./types";

export class SchemaError extends Error {}

function fail(where: string, detail: string): never {
  throw new SchemaError(`${where}: ${detail}`);
}

function isNum(v: unknown): v is number {
  return typeof v === "number" && Number.isFinite(v);
}

export function validateScores(payload: unknown): ScoreRecord[] {
  if (!Array.isArray(payload)) fail("scores", "expected an array");
  for (const r of payload) {
    if (typeof r !== "object" || r === null) fail("scores", "row is not an object");
    const rec = r as Record<string, unknown>;
    if (typeof rec.name !== "string") fail("scores", "missing name");
    for (const key of [
      "grade",
      "similarity_score",
      "relevance",
      "relevance_score",
      "importance_score",
      "rank",
    ]) {
      if (!isNum(rec[key])) fail("scores", `missing numeric ${key} on ${rec.name}`);
    }
  }
  return payload as ScoreRecord[];
}

export function validateGraph(payload: unknown): FamGraph {
  if (typeof payload !== "object" || payload === null) fail("graph", "expected an object");
  const g = payload as Record<string, unknown>;
  if (!Array.isArray(g.features)) fail("graph", "missing features array");
  if (!Array.isArray(g.edges)) fail("graph", "missing edges array");
  const t = g.thresholds as Record<string, unknown> | undefined;
  if (!t || !isNum(t.low) || !isNum(t.high)) fail("graph", "missing thresholds");
  for (const f of g.features as Record<string, unknown>[]) {
    if (!isNum(f.index) || typeof f.name !== "string" || !isNum(f.grade) || typeof f.color !== "string")
      fail("graph", "malformed feature entry");
  }
  const n = (g.features as unknown[]).length;
  for (const e of g.edges as Record<string, unknown>[]) {
    if (!isNum(e.source) || !isNum(e.target) || !isNum(e.weight)) fail("graph", "malformed edge");
    if ((e.source as number) >= n || (e.target as number) >= n) fail("graph", "edge endpoint out of range");
  }
  return payload as FamGraph;
}

export function validateReport(payload: unknown): Report {
  if (typeof payload !== "object" || payload === null) fail("report", "expected an object");
  const r = payload as Record<string, unknown>;
  if (!Array.isArray(r.cells)) fail("report", "missing cells array");
  if (!Array.isArray(r.averages)) fail("report", "missing averages array");
  for (const c of r.cells as Record<string, unknown>[]) {
    for (const key of ["dataset", "method", "classifier", "subset"]) {
      if (typeof c[key] !== "string") fail("report", `missing ${key} on a cell`);
    }
    if (!isNum(c.mean) || !isNum(c.std)) fail("report", "cell mean/std not numeric");
    if (!Array.isArray(c.features)) fail("report", "cell features missing");
  }
  return payload as Report;
}
