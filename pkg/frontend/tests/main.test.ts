import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { init } from "../src/main";
import { SMALL_REPORT, WISCONSIN_SCORES } from "./fixtures";
import type { FamGraph } from "../src/types";

/** Graph payload matching the Wisconsin score fixture: all 3 colors present. */
const WISCONSIN_GRAPH: FamGraph = {
  features: WISCONSIN_SCORES.map((r, i) => ({
    index: i,
    name: r.name,
    grade: r.grade,
    color: { 1: "green", 2: "yellow", 3: "red" }[r.grade]!,
  })),
  edges: [{ source: 4, target: 5, weight: 0.907 }],
  thresholds: { low: 0.67, high: 0.9 },
};

const UPLOAD_SUMMARY = {
  id: "abc123",
  name: "wisconsin",
  features: WISCONSIN_SCORES.map((r) => r.name),
  rows: 683,
  dropped_rows: 16,
  class_distribution: { "2": 444, "4": 239 },
};

function page(): void {
  document.body.innerHTML = `
    <div id="error-banner" class="hidden"></div>
    <input type="file" id="file-input" />
    <input type="text" id="param-class-col" value="" />
    <button id="upload-button"></button>
    <p id="dataset-summary"></p>
    <input id="param-bins" value="10" />
    <input id="param-threshold-low" value="0.67" />
    <input id="param-threshold-high" value="0.9" />
    <input id="param-top" value="0.3" />
    <input id="param-bottom" value="0.3" />
    <input id="param-folds" value="10" />
    <input id="param-iters" value="10" />
    <input id="param-seed" value="42" />
    <span id="top-value"></span><span id="bottom-value"></span>
    <input type="checkbox" id="clf-svm" checked />
    <input type="checkbox" id="clf-decision_tree" checked />
    <input type="checkbox" id="clf-random_forest" checked />
    <input type="checkbox" id="clf-naive_bayes" checked />
    <button id="evaluate-button"></button>
    <span id="job-progress"></span>
    <p id="highlight-note"></p>
    <div id="score-table"></div>
    <svg id="fam-graph" width="640" height="440"></svg>
    <div id="report"></div>
  `;
}

function jsonResponse(payload: unknown): Response {
  return new Response(JSON.stringify(payload), {
    status: 200,
    headers: { "content-type": "application/json" },
  });
}

function mockApi(overrides: Partial<Record<string, unknown>> = {}): void {
  vi.stubGlobal(
    "fetch",
    vi.fn(async (url: RequestInfo | URL) => {
      const path = String(url);
      if (path.includes("/api/datasets?") || path.endsWith("/api/datasets"))
        return jsonResponse(overrides.upload ?? UPLOAD_SUMMARY);
      if (path.includes("/scores")) return jsonResponse(overrides.scores ?? WISCONSIN_SCORES);
      if (path.includes("/graph")) return jsonResponse(overrides.graph ?? WISCONSIN_GRAPH);
      if (path.includes("/evaluate")) return jsonResponse({ job_id: "job1" });
      if (path.includes("/api/jobs/"))
        return jsonResponse({
          id: "job1",
          status: "done",
          progress: { done: 2, total: 2 },
          result: overrides.report ?? SMALL_REPORT,
        });
      throw new Error(`unexpected fetch ${path}`);
    }),
  );
}

async function flush(times = 8): Promise<void> {
  for (let i = 0; i < times; i++) await new Promise((resolve) => setTimeout(resolve, 0));
}

async function uploadFixture(): Promise<void> {
  const input = document.getElementById("file-input") as HTMLInputElement;
  const file = new File(["a,b,y\n1,2,0\n3,4,1\n"], "wisconsin.csv", { type: "text/csv" });
  Object.defineProperty(input, "files", { value: [file], configurable: true });
  (document.getElementById("upload-button") as HTMLButtonElement).click();
  await flush();
}

beforeEach(() => {
  page();
  init();
});

afterEach(() => {
  vi.unstubAllGlobals();
});

describe("upload flow", () => {
  it("renders the payload's rank-1 feature first and a 3-colored graph", async () => {
    mockApi();
    await uploadFixture();

    expect(document.getElementById("dataset-summary")!.textContent).toContain("683 rows");
    const firstRow = document.querySelector("#score-table tbody tr")!;
    expect(firstRow.getAttribute("data-name")).toBe("Bare Nuclei");

    const colors = new Set(
      [...document.querySelectorAll("#fam-graph circle")].map((c) => c.getAttribute("fill")),
    );
    expect(colors).toEqual(new Set(["green", "yellow", "red"]));
  });

  it("displays table numbers verbatim from the payload", async () => {
    mockApi();
    await uploadFixture();
    const row = document.querySelector('#score-table tr[data-name="Bare Nuclei"]')!;
    const cells = [...row.querySelectorAll("td")].map((td) => td.textContent);
    expect(cells).toContain(String(WISCONSIN_SCORES[0].importance_score));
    expect(cells).toContain(String(WISCONSIN_SCORES[0].relevance_score));
  });

  it("re-highlights ceil(fraction * n) rows when the top fraction changes", async () => {
    mockApi();
    await uploadFixture();
    expect(document.querySelectorAll("#score-table tr.highlighted")).toHaveLength(3);

    const slider = document.getElementById("param-top") as HTMLInputElement;
    slider.value = "0.5";
    slider.dispatchEvent(new Event("change"));
    await flush();
    expect(document.querySelectorAll("#score-table tr.highlighted")).toHaveLength(5);

    slider.value = "0.1";
    slider.dispatchEvent(new Event("change"));
    await flush();
    const highlighted = document.querySelectorAll("#score-table tr.highlighted");
    expect(highlighted).toHaveLength(1);
    expect(highlighted[0].getAttribute("data-name")).toBe("Bare Nuclei");
  });

  it("shows the error banner and renders nothing on a schema violation", async () => {
    mockApi({ scores: [{ bogus: true }] });
    await uploadFixture();
    const banner = document.getElementById("error-banner")!;
    expect(banner.classList.contains("hidden")).toBe(false);
    expect(banner.textContent).toMatch(/scores/);
    expect(document.querySelectorAll("#score-table tbody tr")).toHaveLength(0);
  });
});

describe("evaluate flow", () => {
  it("polls the job and renders the report with payload means intact", async () => {
    mockApi();
    await uploadFixture();
    (document.getElementById("evaluate-button") as HTMLButtonElement).click();
    await flush(12);

    const report = document.getElementById("report")!;
    expect(report.querySelector("h3")!.textContent).toBe("svm");
    const means = [...report.querySelectorAll("td[data-mean]")].map(
      (td) => (td as HTMLElement).dataset.mean,
    );
    expect(means).toContain(String(SMALL_REPORT.cells[0].mean));
  });
});
