/** Payload shapes mirrored from the HTTP API. */

export interface ScoreRecord {
  name: string;
  grade: number;
  similarity_score: number;
  relevance: number;
  relevance_score: number;
  importance_score: number;
  rank: number;
}

export interface GraphFeature {
  index: number;
  name: string;
  grade: number;
  color: string;
}

export interface GraphEdge {
  source: number;
  target: number;
  weight: number;
}

export interface FamGraph {
  features: GraphFeature[];
  edges: GraphEdge[];
  thresholds: { low: number; high: number };
}

export interface ReportCell {
  dataset: string;
  method: string;
  classifier: string;
  subset: string;
  mean: number;
  std: number;
  features: string[];
}

export interface ReportAverage {
  method: string;
  classifier: string;
  subset: string;
  mean: number;
}

export interface Report {
  cells: ReportCell[];
  averages: ReportAverage[];
  config: Record<string, unknown>;
}

export interface UploadSummary {
  id: string;
  name: string;
  features: string[];
  rows: number;
  dropped_rows: number;
  class_distribution: Record<string, number>;
}

export interface JobStatus {
  id: string;
  status: "queued" | "running" | "done" | "error";
  progress: { done: number; total: number };
  result?: Report;
  error?: string;
}

/** Parameter panel values; mirrors the CLI flags one to one. */
export interface Params {
  bins: number;
  thresholdLow: number;
  thresholdHigh: number;
  topFraction: number;
  bottomFraction: number;
  classifiers: string[];
  folds: number;
  iters: number;
  seed: number;
}

export const DEFAULT_PARAMS: Params = {
  bins: 10,
  thresholdLow: 0.67,
  thresholdHigh: 0.9,
  topFraction: 0.3,
  bottomFraction: 0.3,
  classifiers: ["svm", "decision_tree", "random_forest", "naive_bayes"],
  folds: 10,
  iters: 10,
  seed: 42,
};

export const ALL_CLASSIFIERS = ["svm", "decision_tree", "random_forest", "naive_bayes"];
