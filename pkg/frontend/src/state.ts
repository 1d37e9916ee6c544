/** Client-side state helpers: request coalescing and selection arithmetic. */

import type { Params } from "./types";

/** Stable key for a parameter set; identical params coalesce to one request. */
export function paramsKey(params: Params, ...extra: (string | number)[]): string {
  return JSON.stringify([
    params.bins,
    params.thresholdLow,
    params.thresholdHigh,
    params.topFraction,
    params.bottomFraction,
    [...params.classifiers].sort(),
    params.folds,
    params.iters,
    params.seed,
    ...extra,
  ]);
}

/** Number of highlighted features for a fraction: ceil(fraction * n). */
export function highlightCount(n: number, fraction: number): number {
  if (n <= 0) return 0;
  return Math.min(n, Math.ceil(fraction * n));
}

/**
 * Per-endpoint fetch gate: at most one request in flight, and a response is
 * delivered only while its key is still the latest one asked for. Stale
 * responses (superseded parameters) are silently dropped.
 */
export class LatestOnly<T> {
  private currentKey: string | null = null;
  private inFlight: Map<string, Promise<T>> = new Map();

  async run(key: string, fetcher: () => Promise<T>, apply: (value: T) => void): Promise<void> {
    this.currentKey = key;
    let promise = this.inFlight.get(key);
    if (!promise) {
      promise = fetcher();
      this.inFlight.set(key, promise);
    }
    try {
      const value = await promise;
      if (this.currentKey === key) apply(value);
    } finally {
      this.inFlight.delete(key);
    }
  }

  /** Number of distinct requests currently in flight (for tests). */
  get pending(): number {
    return this.inFlight.size;
  }
}
