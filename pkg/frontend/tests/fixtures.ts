import type { FamGraph, Report, ScoreRecord } from "../src/types";

/** Score payload shaped like the Wisconsin benchmark: Bare Nuclei first. */
export const WISCONSIN_SCORES: ScoreRecord[] = [
  { name: "Bare Nuclei", grade: 1, similarity_score: 0.409, relevance: 0.603, relevance_score: 1.155, importance_score: 2.824, rank: 1 },
  { name: "Clump Thickness", grade: 1, similarity_score: 0.409, relevance: 0.464, relevance_score: 0.889, importance_score: 2.172, rank: 2 },
  { name: "Mitosis", grade: 1, similarity_score: 0.409, relevance: 0.212, relevance_score: 0.406, importance_score: 0.992, rank: 3 },
  { name: "Epithelial Size", grade: 2, similarity_score: 1.636, relevance: 0.534, relevance_score: 1.023, importance_score: 0.625, rank: 4 },
  { name: "Cell Size", grade: 3, similarity_score: 3.682, relevance: 0.702, relevance_score: 1.345, importance_score: 0.365, rank: 5 },
  { name: "Cell Shape", grade: 3, similarity_score: 3.682, relevance: 0.677, relevance_score: 1.296, importance_score: 0.352, rank: 6 },
  { name: "Bland Chromatin", grade: 3, similarity_score: 3.682, relevance: 0.555, relevance_score: 1.063, importance_score: 0.289, rank: 7 },
  { name: "Normal Nucleoli", grade: 3, similarity_score: 3.682, relevance: 0.487, relevance_score: 0.933, importance_score: 0.253, rank: 8 },
  { name: "Marginal Adhesion", grade: 3, similarity_score: 3.682, relevance: 0.464, relevance_score: 0.889, importance_score: 0.242, rank: 9 },
];

export const SMALL_GRAPH: FamGraph = {
  features: [
    { index: 0, name: "alpha", grade: 1, color: "green" },
    { index: 1, name: "beta", grade: 2, color: "yellow" },
    { index: 2, name: "gamma", grade: 3, color: "red" },
    { index: 3, name: "delta", grade: 3, color: "red" },
  ],
  edges: [
    { source: 1, target: 2, weight: 0.7 },
    { source: 2, target: 3, weight: 0.95 },
  ],
  thresholds: { low: 0.67, high: 0.9 },
};

export const SMALL_REPORT: Report = {
  cells: [
    { dataset: "demo", method: "famex", classifier: "svm", subset: "top", mean: 0.91, std: 0.01, features: ["alpha", "beta"] },
    { dataset: "demo", method: "famex", classifier: "svm", subset: "bottom", mean: 0.72, std: 0.02, features: ["gamma", "delta"] },
    { dataset: "demo", method: "pfi", classifier: "svm", subset: "top", mean: 0.88, std: 0.015, features: ["beta", "alpha"] },
    { dataset: "demo", method: "pfi", classifier: "svm", subset: "bottom", mean: 0.75, std: 0.02, features: ["delta", "gamma"] },
  ],
  averages: [
    { method: "famex", classifier: "svm", subset: "top", mean: 0.91 },
    { method: "famex", classifier: "svm", subset: "bottom", mean: 0.72 },
    { method: "pfi", classifier: "svm", subset: "top", mean: 0.88 },
    { method: "pfi", classifier: "svm", subset: "bottom", mean: 0.75 },
  ],
  config: {},
};
