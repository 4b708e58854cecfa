import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { ANALYZE_DELAY_MS, debounce } from "../src/debounce.js";

describe("debounce", () => {
  beforeEach(() => vi.useFakeTimers());
  afterEach(() => vi.useRealTimers());

  it("collapses a burst into one trailing call with the last arguments", () => {
    const calls: string[] = [];
    const run = debounce((text: string) => calls.push(text), ANALYZE_DELAY_MS);
    run("h");
    vi.advanceTimersByTime(100);
    run("he");
    vi.advanceTimersByTime(100);
    run("help");
    expect(calls).toEqual([]);
    vi.advanceTimersByTime(ANALYZE_DELAY_MS - 1);
    expect(calls).toEqual([]);
    vi.advanceTimersByTime(1);
    expect(calls).toEqual(["help"]);
  });

  it("fires again for a later, separate burst", () => {
    const calls: number[] = [];
    const run = debounce((n: number) => calls.push(n), 50);
    run(1);
    vi.advanceTimersByTime(60);
    run(2);
    vi.advanceTimersByTime(60);
    expect(calls).toEqual([1, 2]);
  });
});
