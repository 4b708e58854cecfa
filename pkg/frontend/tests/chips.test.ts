import { describe, expect, it } from "vitest";

import { MAX_KEYWORDS, addCustomKeyword, canPublish, normalizeKeyword, toggleChip } from "../src/chips.js";

describe("normalizeKeyword", () => {
  it("lowercases and strips punctuation like the server", () => {
    expect(normalizeKeyword("  Exams!!  ")).toBe("exams");
    expect(normalizeKeyword("Sleep-deprived")).toBe("sleepdeprived");
    expect(normalizeKeyword("two   words")).toBe("two words");
  });

  it("can empty out entirely", () => {
    expect(normalizeKeyword("?!...")).toBe("");
  });
});

describe("toggleChip", () => {
  it("adds a missing term and removes a present one", () => {
    const added = toggleChip([], "Exam");
    expect(added.selected).toEqual(["exam"]);
    expect(added.error).toBeUndefined();
    const removed = toggleChip(added.selected, "exam!");
    expect(removed.selected).toEqual([]);
  });

  it("refuses a fourth selection but still allows deselection", () => {
    const full = ["a", "b", "c"];
    const over = toggleChip(full, "d");
    expect(over.selected).toEqual(full);
    expect(over.error).toContain(String(MAX_KEYWORDS));
    expect(toggleChip(full, "b").selected).toEqual(["a", "c"]);
  });

  it("reports terms that normalize to nothing", () => {
    const change = toggleChip(["a"], "!!!");
    expect(change.selected).toEqual(["a"]);
    expect(change.error).toBeDefined();
  });
});

describe("addCustomKeyword", () => {
  it("rejects duplicates instead of toggling them off", () => {
    const change = addCustomKeyword(["exam"], "EXAM");
    expect(change.selected).toEqual(["exam"]);
    expect(change.error).toContain("already");
  });

  it("enforces the cap", () => {
    const change = addCustomKeyword(["a", "b", "c"], "d");
    expect(change.selected).toEqual(["a", "b", "c"]);
    expect(change.error).toBeDefined();
  });
});

describe("canPublish", () => {
  it("requires body, emotion, and one to three keywords", () => {
    expect(canPublish("hello", "fear", ["exam"])).toBe(true);
    expect(canPublish("   ", "fear", ["exam"])).toBe(false);
    expect(canPublish("hello", null, ["exam"])).toBe(false);
    expect(canPublish("hello", "fear", [])).toBe(false);
    expect(canPublish("hello", "fear", ["a", "b", "c", "d"])).toBe(false);
  });
});
