// End-to-end UI flows in an emulated DOM: composing with live suggestions,
// union tag filtering, and the staged reply composer. The mock backend
// validates exactly like the real service and counts payloads it rejects;
// the composer flows must keep that count at zero.

import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { ANALYZE_DELAY_MS } from "../src/debounce.js";
import { EXPLORATION_PROMPT, INTERPRETATION_PROMPT } from "../src/reply.js";
import { AppHandle, initApp } from "../src/app.js";
import { GENERALIZED, MockServer, TARGETED, createMockServer } from "./mockServer.js";

function sleep(ms: number): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, ms));
}

async function until(check: () => boolean, label: string, timeoutMs = 3000): Promise<void> {
  const started = Date.now();
  while (!check()) {
    if (Date.now() - started > timeoutMs) throw new Error(`timed out waiting for ${label}`);
    await sleep(10);
  }
}

function find<T extends Element>(selector: string): T {
  const node = document.querySelector<T>(selector);
  if (!node) throw new Error(`missing element: ${selector}`);
  return node;
}

function typeInto(field: HTMLTextAreaElement | HTMLInputElement, text: string): void {
  field.value = text;
  field.dispatchEvent(new Event("input", { bubbles: true }));
}

let server: MockServer;
let app: AppHandle;

beforeEach(async () => {
  server = createMockServer();
  vi.stubGlobal("fetch", server.fetch);
  document.body.innerHTML = `<main id="app"></main>`;
  window.location.hash = "";
  app = initApp(window as Window & typeof globalThis);
  await app.refresh();
});

afterEach(() => vi.unstubAllGlobals());

describe("compose flow", () => {
  it("debounces analysis, applies suggestions, and publishes", async () => {
    await app.navigate("#/compose");
    const textarea = find<HTMLTextAreaElement>("#body-input");

    typeInto(textarea, "I am so");
    await sleep(50);
    typeInto(textarea, "I am so worried about");
    await sleep(50);
    typeInto(textarea, "I am so worried about the night shifts ahead");
    await sleep(ANALYZE_DELAY_MS + 250);

    expect(server.state.analyzeCalls).toBe(1);
    const suggestedPill = find<HTMLButtonElement>(".emotion-pill.suggested");
    expect(suggestedPill.dataset.emotion).toBe("fear");
    expect(suggestedPill.classList.contains("active")).toBe(true);
    expect(find<HTMLButtonElement>("#publish-btn").disabled).toBe(true);

    find<HTMLButtonElement>(".suggested-chip").click();
    expect(find<HTMLButtonElement>("#publish-btn").disabled).toBe(false);

    typeInto(find<HTMLInputElement>("#custom-keyword"), "Night-Shifts!");
    find<HTMLButtonElement>("#add-keyword").click();
    const selected = [...document.querySelectorAll(".selected-chip")].map((chip) =>
      (chip as HTMLElement).dataset.term,
    );
    expect(selected).toContain("worried");
    expect(selected).toContain("nightshifts");

    find<HTMLButtonElement>("#publish-btn").click();
    await until(() => document.getElementById("post-detail") !== null, "post detail view");

    expect(window.location.hash).toBe("#/post/1");
    expect(server.state.posts).toHaveLength(1);
    const stored = server.state.posts[0]!;
    expect(stored.emotion).toBe("fear");
    expect(stored.keywords).toEqual(["worried", "nightshifts"]);
    expect(find("#post-detail").textContent).toContain("night shifts");
  });

  it("lets the author overrule the suggested emotion", async () => {
    await app.navigate("#/compose");
    typeInto(find<HTMLTextAreaElement>("#body-input"), "worried about everything lately");
    await sleep(ANALYZE_DELAY_MS + 250);

    find<HTMLButtonElement>(".emotion-pill[data-emotion='distress']").click();
    find<HTMLButtonElement>(".suggested-chip").click();
    find<HTMLButtonElement>("#publish-btn").click();
    await until(() => server.state.posts.length === 1, "post stored");
    expect(server.state.posts[0]!.emotion).toBe("distress");
  });
});

describe("feed filtering", () => {
  beforeEach(() => {
    server.seedPost("exam tomorrow and I cannot stop shaking", "fear", ["exam"]);
    server.seedPost("have not slept properly in a week", "sadness", ["sleep"]);
    server.seedPost("got the apprenticeship I wanted", "happiness", ["work"]);
  });

  function cardIds(): string[] {
    return [...document.querySelectorAll(".post-card")].map((card) => (card as HTMLElement).dataset.id!);
  }

  it("shows the newest post first and filters as a union", async () => {
    await app.navigate("#/feed");
    await until(() => cardIds().length === 3, "full feed");
    expect(cardIds()).toEqual(["3", "2", "1"]);

    find<HTMLButtonElement>(".tag-emotion[data-emotion='fear']").click();
    await until(() => cardIds().length === 1, "emotion-filtered feed");
    expect(cardIds()).toEqual(["1"]);

    find<HTMLButtonElement>(".tag-keyword[data-term='sleep']").click();
    await until(() => cardIds().length === 2, "union-filtered feed");
    expect(cardIds()).toEqual(["2", "1"]);

    find<HTMLButtonElement>("#clear-tags").click();
    await until(() => cardIds().length === 3, "cleared feed");
  });

  it("opens a post from its card", async () => {
    await app.navigate("#/feed");
    await until(() => cardIds().length === 3, "full feed");
    find<HTMLElement>(".post-card[data-id='2']").click();
    await until(() => document.getElementById("post-detail") !== null, "post detail view");
    expect(find("#post-detail").getAttribute("data-id")).toBe("2");
  });
});

describe("staged reply", () => {
  beforeEach(() => {
    server.seedPost("everything fell apart this month", "sadness", ["family"]);
  });

  it("walks the three stages and the server never rejects a payload", async () => {
    await app.navigate("#/post/1");
    find<HTMLButtonElement>("#start-reply").click();
    await until(() => document.querySelectorAll(".trigger-option").length === 3, "trigger offer");

    const options = [...document.querySelectorAll(".trigger-option")].map(
      (option) => (option as HTMLElement).dataset.phrase,
    );
    expect(options).toEqual([TARGETED.sadness[0], TARGETED.sadness[1], GENERALIZED[0]]);
    expect(find<HTMLButtonElement>("#advance-btn").disabled).toBe(true);

    find<HTMLButtonElement>(`.trigger-option[data-phrase="${TARGETED.sadness[1]}"]`).click();
    expect(find<HTMLButtonElement>("#advance-btn").disabled).toBe(false);
    find<HTMLButtonElement>("#advance-btn").click();
    expect(find("#stage-prompt").textContent).toBe(INTERPRETATION_PROMPT);
    expect(find("#flag-reaction").classList.contains("done")).toBe(true);

    expect(find<HTMLButtonElement>("#advance-btn").disabled).toBe(true);
    typeInto(find<HTMLTextAreaElement>("#stage-text"), "It sounds like several losses landed at once.");
    expect(find<HTMLButtonElement>("#advance-btn").disabled).toBe(false);
    find<HTMLButtonElement>("#advance-btn").click();
    expect(find("#stage-prompt").textContent).toBe(EXPLORATION_PROMPT);
    expect(find("#flag-interpretation").classList.contains("done")).toBe(true);

    typeInto(find<HTMLTextAreaElement>("#stage-text"), "Which part has been hardest to sit with?");
    find<HTMLButtonElement>("#advance-btn").click();
    const preview = find("#reply-preview").textContent ?? "";
    expect(preview).toContain(TARGETED.sadness[1]!);
    expect(preview).toContain("hardest to sit with?");

    find<HTMLButtonElement>("#submit-comment").click();
    await until(() => document.querySelectorAll(".comment").length === 1, "stored comment");

    expect(server.state.rejectedStagedPayloads).toBe(0);
    const commentPosts = server.state.requestLog.filter((line) => line === "POST /posts/1/comments");
    expect(commentPosts).toHaveLength(1);
    expect(server.state.comments[0]!.epitome.complete).toBe(true);
    expect(find(".epitome-badge").classList.contains("complete")).toBe(true);
  });

  it("keeps the question-mark nudge advisory, not blocking", async () => {
    await app.navigate("#/post/1");
    find<HTMLButtonElement>("#start-reply").click();
    await until(() => document.querySelectorAll(".trigger-option").length === 3, "trigger offer");

    find<HTMLButtonElement>(".trigger-option").click();
    find<HTMLButtonElement>("#advance-btn").click();
    typeInto(find<HTMLTextAreaElement>("#stage-text"), "That is a lot to carry.");
    find<HTMLButtonElement>("#advance-btn").click();
    typeInto(find<HTMLTextAreaElement>("#stage-text"), "I hope next month is gentler.");
    expect(find<HTMLButtonElement>("#advance-btn").disabled).toBe(false);
    find<HTMLButtonElement>("#advance-btn").click();
    find<HTMLButtonElement>("#submit-comment").click();
    await until(() => server.state.comments.length === 1, "stored comment");

    expect(server.state.rejectedStagedPayloads).toBe(0);
    const epitome = server.state.comments[0]!.epitome;
    expect(epitome.has_exploration).toBe(false);
    expect(epitome.complete).toBe(false);
    await until(() => document.querySelector(".epitome-badge") !== null, "badge rendered");
    expect(find(".epitome-badge").classList.contains("partial")).toBe(true);
  });
});
