/** Force-directed layout and SVG rendering of the association map. */

import type { FamGraph, ScoreRecord } from "./types";

export interface NodePosition {
  x: number;
  y: number;
  vx: number;
  vy: number;
}

/** Deterministic 32-bit PRNG so layouts are reproducible in tests. */
export function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

/**
 * Spring-and-repulsion layout: edges pull their endpoints toward a rest
 * length scaled by weight, all pairs repel, and everything drifts gently
 * toward the center. A few hundred damped steps settle visibly.
 */
export function runLayout(
  graph: FamGraph,
  width: number,
  height: number,
  iterations = 300,
  seed = 1,
): NodePosition[] {
  const rand = mulberry32(seed);
  const n = graph.features.length;
  const nodes: NodePosition[] = Array.from({ length: n }, () => ({
    x: width / 2 + (rand() - 0.5) * width * 0.6,
    y: height / 2 + (rand() - 0.5) * height * 0.6,
    vx: 0,
    vy: 0,
  }));
  if (n === 0) return nodes;

  const area = width * height;
  const repulsion = area / Math.max(n, 1) / 18;
  const restLength = Math.sqrt(area / (n + 4)) * 0.9;

  for (let it = 0; it < iterations; it++) {
    const damp = 0.85;
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        const dx = nodes[j].x - nodes[i].x;
        const dy = nodes[j].y - nodes[i].y;
        const d2 = Math.max(dx * dx + dy * dy, 1e-4);
        const f = repulsion / d2;
        const d = Math.sqrt(d2);
        nodes[i].vx -= (f * dx) / d;
        nodes[i].vy -= (f * dy) / d;
        nodes[j].vx += (f * dx) / d;
        nodes[j].vy += (f * dy) / d;
      }
    }
    for (const e of graph.edges) {
      const a = nodes[e.source];
      const b = nodes[e.target];
      const dx = b.x - a.x;
      const dy = b.y - a.y;
      const d = Math.max(Math.sqrt(dx * dx + dy * dy), 1e-2);
      // heavier edges pull tighter
      const target = restLength * (1.35 - 0.5 * Math.min(e.weight, 1));
      const f = (d - target) * 0.02;
      a.vx += (f * dx) / d;
      a.vy += (f * dy) / d;
      b.vx -= (f * dx) / d;
      b.vy -= (f * dy) / d;
    }
    for (const node of nodes) {
      node.vx += (width / 2 - node.x) * 0.002;
      node.vy += (height / 2 - node.y) * 0.002;
      node.x += node.vx;
      node.y += node.vy;
      node.vx *= damp;
      node.vy *= damp;
      const pad = 18;
      node.x = Math.min(width - pad, Math.max(pad, node.x));
      node.y = Math.min(height - pad, Math.max(pad, node.y));
    }
  }
  return nodes;
}

const SVG_NS = "http://www.w3.org/2000/svg";

function el<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string>,
): SVGElementTagNameMap[K] {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  return node;
}

export function renderGraph(
  svg: SVGSVGElement,
  graph: FamGraph,
  highlighted: Set<string>,
  scoresByName: Map<string, ScoreRecord>,
  seed = 1,
): void {
  svg.replaceChildren();
  const width = Number(svg.getAttribute("width") ?? 640);
  const height = Number(svg.getAttribute("height") ?? 420);
  const positions = runLayout(graph, width, height, 300, seed);

  for (const e of graph.edges) {
    const a = positions[e.source];
    const b = positions[e.target];
    const line = el("line", {
      x1: a.x.toFixed(1),
      y1: a.y.toFixed(1),
      x2: b.x.toFixed(1),
      y2: b.y.toFixed(1),
      class: "fam-edge",
      "stroke-width": (1 + 3 * (e.weight - 0.5)).toFixed(2),
    });
    line.appendChild(el("title", {})).textContent = `|r| = ${e.weight}`;
    svg.append(line);
    const label = el("text", {
      x: ((a.x + b.x) / 2).toFixed(1),
      y: ((a.y + b.y) / 2 - 4).toFixed(1),
      class: "fam-edge-label",
    });
    label.textContent = String(Math.round(e.weight * 1000) / 1000);
    svg.append(label);
  }

  for (const f of graph.features) {
    const p = positions[f.index];
    const group = el("g", { class: "fam-node", "data-name": f.name, "data-grade": String(f.grade) });
    const circle = el("circle", {
      cx: p.x.toFixed(1),
      cy: p.y.toFixed(1),
      r: highlighted.has(f.name) ? "14" : "10",
      fill: f.color,
      class: highlighted.has(f.name) ? "fam-circle highlighted" : "fam-circle",
    });
    const score = scoresByName.get(f.name);
    const tip = [
      `${f.name} (grade ${f.grade})`,
      score ? `importance ${score.importance_score}` : "",
      score ? `similarity ${score.similarity_score}, relevance ${score.relevance_score}` : "",
    ]
      .filter(Boolean)
      .join("\n");
    circle.appendChild(el("title", {})).textContent = tip;
    group.append(circle);
    const label = el("text", {
      x: p.x.toFixed(1),
      y: (p.y - 16).toFixed(1),
      class: "fam-label",
    });
    label.textContent = f.name;
    group.append(label);
    svg.append(group);
  }
}
