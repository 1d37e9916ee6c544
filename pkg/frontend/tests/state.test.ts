import { describe, expect, it } from "vitest";

import { highlightCount, LatestOnly, paramsKey } from "../src/state";
import { DEFAULT_PARAMS } from "../src/types";

describe("highlightCount", () => {
  it("takes the ceiling of fraction * n", () => {
    expect(highlightCount(9, 0.3)).toBe(3);
    expect(highlightCount(10, 0.3)).toBe(3);
    expect(highlightCount(11, 0.3)).toBe(4);
    expect(highlightCount(8, 0.3)).toBe(3);
  });

  it("covers the edges", () => {
    expect(highlightCount(5, 1.0)).toBe(5);
    expect(highlightCount(0, 0.3)).toBe(0);
    expect(highlightCount(3, 0.01)).toBe(1);
  });
});

describe("paramsKey", () => {
  it("is stable under classifier order", () => {
    const a = paramsKey({ ...DEFAULT_PARAMS, classifiers: ["svm", "naive_bayes"] });
    const b = paramsKey({ ...DEFAULT_PARAMS, classifiers: ["naive_bayes", "svm"] });
    expect(a).toBe(b);
  });

  it("changes when any parameter changes", () => {
    expect(paramsKey(DEFAULT_PARAMS)).not.toBe(paramsKey({ ...DEFAULT_PARAMS, bins: 5 }));
    expect(paramsKey(DEFAULT_PARAMS, "s1")).not.toBe(paramsKey(DEFAULT_PARAMS, "s2"));
  });
});

describe("LatestOnly", () => {
  it("applies the response for the latest key only", async () => {
    const gate = new LatestOnly<string>();
    const applied: string[] = [];
    let releaseOld: (v: string) => void = () => {};
    const oldPromise = new Promise<string>((resolve) => (releaseOld = resolve));

    const oldRun = gate.run("old", () => oldPromise, (v) => applied.push(v));
    await gate.run("new", () => Promise.resolve("new-data"), (v) => applied.push(v));
    releaseOld("old-data");
    await oldRun;

    expect(applied).toEqual(["new-data"]); // stale response dropped
  });

  it("coalesces concurrent requests with the same key", async () => {
    const gate = new LatestOnly<number>();
    let calls = 0;
    const slow = () =>
      new Promise<number>((resolve) => {
        calls += 1;
        setTimeout(() => resolve(7), 5);
      });
    const applied: number[] = [];
    const r1 = gate.run("k", slow, (v) => applied.push(v));
    const r2 = gate.run("k", slow, (v) => applied.push(v));
    expect(gate.pending).toBe(1); // one request in flight, not two
    await Promise.all([r1, r2]);
    expect(calls).toBe(1);
    expect(applied).toEqual([7, 7]);
  });
});
