// Single-page board UI: compose with live suggestions, tag-filtered feed,
// and a staged reply composer. Hash routes: #/feed, #/compose, #/post/<id>.

import {
  ApiError,
  DraftSuggestion,
  EMOTIONS,
  Emotion,
  PostDetail,
  analyzeDraft,
  fetchFeed,
  fetchPost,
  fetchTags,
  publishPost,
  requestTriggers,
  submitComment,
} from "./api.js";
import { addCustomKeyword, canPublish, toggleChip } from "./chips.js";
import { ANALYZE_DELAY_MS, debounce } from "./debounce.js";
import {
  ReplyDraft,
  advance,
  canAdvance,
  chooseTrigger,
  commentPayload,
  newReply,
  partFlags,
  writeExploration,
  writeInterpretation,
} from "./reply.js";

export interface AppHandle {
  navigate(hash: string): Promise<void>;
  refresh(): Promise<void>;
}

function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function initApp(win: Window & typeof globalThis): AppHandle {
  const doc = win.document;
  const root = doc.getElementById("app");
  if (!root) throw new Error("missing #app element");

  // --- state ---
  let selectedTagEmotions: string[] = [];
  let selectedTagKeywords: string[] = [];
  let composeBody = "";
  let suggestion: DraftSuggestion | null = null;
  let chosenEmotion: Emotion | null = null;
  let emotionPinnedByUser = false;
  let selectedKeywords: string[] = [];
  let composeNote = "";
  let reply: ReplyDraft | null = null;
  let replyPrompt: string | null = null;
  let replyNote = "";
  let banner = "";

  function describe(error: unknown): string {
    if (error instanceof ApiError) return `${error.code}: ${error.message}`;
    return String(error);
  }

  // --- compose view ---

  const scheduleAnalysis = debounce(async (body: string) => {
    if (!body.trim()) {
      suggestion = null;
      renderSuggestionZone();
      return;
    }
    try {
      const result = await analyzeDraft(body);
      if (body !== composeBody) return; // stale response, user kept typing
      suggestion = result;
      if (!emotionPinnedByUser) chosenEmotion = result.suggested_emotion;
      renderSuggestionZone();
    } catch (error) {
      banner = describe(error);
      renderSuggestionZone();
    }
  }, ANALYZE_DELAY_MS);

  function renderSuggestionZone(): void {
    const zone = doc.getElementById("suggestion-zone");
    if (!zone) return;
    const emotionPills = EMOTIONS.map((emotion) => {
      const suggested = suggestion?.suggested_emotion === emotion ? " suggested" : "";
      const active = chosenEmotion === emotion ? " active" : "";
      return `<button class="emotion-pill${suggested}${active}" data-emotion="${emotion}">${emotion}</button>`;
    }).join("");
    const suggestedChips = (suggestion?.suggested_keywords ?? [])
      .map((kw) => {
        const active = selectedKeywords.includes(kw.term) ? " active" : "";
        return `<button class="chip suggested-chip${active}" data-term="${escapeHtml(kw.term)}">${escapeHtml(kw.term)}</button>`;
      })
      .join("");
    const chosenChips = selectedKeywords
      .map((term) => `<button class="chip selected-chip" data-term="${escapeHtml(term)}">${escapeHtml(term)} ✕</button>`)
      .join("");
    const confidence = suggestion ? ` (confidence ${(suggestion.confidence * 100).toFixed(0)}%)` : "";
    zone.innerHTML = `
      ${banner ? `<p id="error-banner">${escapeHtml(banner)}</p>` : ""}
      <h3>Emotion${confidence}</h3>
      <div class="pill-row">${emotionPills}</div>
      <h3>Keywords (1-3)</h3>
      <div class="chip-row" id="suggested-chips">${suggestedChips || "<span class='hint'>suggestions appear as you write</span>"}</div>
      <div class="chip-row" id="selected-chips">${chosenChips || "<span class='hint'>none selected</span>"}</div>
      <div class="custom-row">
        <input id="custom-keyword" placeholder="own keyword" />
        <button id="add-keyword">add</button>
      </div>
      ${composeNote ? `<p class="note">${escapeHtml(composeNote)}</p>` : ""}
      <button id="publish-btn" ${canPublish(composeBody, chosenEmotion, selectedKeywords) ? "" : "disabled"}>publish</button>
    `;
    zone.querySelectorAll<HTMLButtonElement>(".emotion-pill").forEach((pill) =>
      pill.addEventListener("click", () => {
        chosenEmotion = pill.dataset.emotion as Emotion;
        emotionPinnedByUser = true;
        renderSuggestionZone();
      }),
    );
    zone.querySelectorAll<HTMLButtonElement>(".chip").forEach((chip) =>
      chip.addEventListener("click", () => {
        const change = toggleChip(selectedKeywords, chip.dataset.term ?? "");
        selectedKeywords = change.selected;
        composeNote = change.error ?? "";
        renderSuggestionZone();
      }),
    );
    doc.getElementById("add-keyword")?.addEventListener("click", () => {
      const input = doc.getElementById("custom-keyword") as HTMLInputElement | null;
      const change = addCustomKeyword(selectedKeywords, input?.value ?? "");
      selectedKeywords = change.selected;
      composeNote = change.error ?? "";
      renderSuggestionZone();
    });
    doc.getElementById("publish-btn")?.addEventListener("click", async () => {
      if (!chosenEmotion) return;
      try {
        const post = await publishPost(composeBody, chosenEmotion, selectedKeywords);
        composeBody = "";
        suggestion = null;
        chosenEmotion = null;
        emotionPinnedByUser = false;
        selectedKeywords = [];
        composeNote = "";
        banner = "";
        await navigate(`#/post/${post.id}`);
      } catch (error) {
        composeNote = describe(error);
        renderSuggestionZone();
      }
    });
  }

  function renderCompose(): void {
    root!.innerHTML = `
      <h2>Share what happened</h2>
      <textarea id="body-input" rows="6" placeholder="What's on your mind?">${escapeHtml(composeBody)}</textarea>
      <div id="suggestion-zone"></div>
    `;
    const textarea = doc.getElementById("body-input") as HTMLTextAreaElement;
    textarea.addEventListener("input", () => {
      composeBody = textarea.value;
      scheduleAnalysis(composeBody);
    });
    renderSuggestionZone();
  }

  // --- feed view ---

  async function renderFeed(): Promise<void> {
    let tagBar = "";
    let feedHtml = "";
    try {
      const [tags, posts] = await Promise.all([
        fetchTags(),
        fetchFeed(selectedTagEmotions, selectedTagKeywords),
      ]);
      tagBar =
        tags.emotions
          .map((emotion) => {
            const active = selectedTagEmotions.includes(emotion) ? " active" : "";
            return `<button class="tag-emotion${active}" data-emotion="${emotion}">${emotion}</button>`;
          })
          .join("") +
        tags.keywords
          .map((term) => {
            const active = selectedTagKeywords.includes(term) ? " active" : "";
            return `<button class="tag-keyword${active}" data-term="${escapeHtml(term)}">#${escapeHtml(term)}</button>`;
          })
          .join("");
      feedHtml = posts
        .map(
          (post) => `
            <article class="post-card" data-id="${post.id}">
              <span class="emotion-label">${post.emotion}</span>
              <p>${escapeHtml(post.body)}</p>
              <footer>${post.keywords.map((k) => `#${escapeHtml(k)}`).join(" ")}</footer>
            </article>`,
        )
        .join("");
      if (!posts.length) feedHtml = "<p class='hint' id='empty-feed'>nothing here yet</p>";
    } catch (error) {
      feedHtml = `<p id="error-banner">${escapeHtml(describe(error))}</p>`;
    }
    root!.innerHTML = `
      <h2>Recent posts</h2>
      <div id="tag-bar">${tagBar} <button id="clear-tags">clear</button></div>
      <div id="feed-list">${feedHtml}</div>
    `;
    root!.querySelectorAll<HTMLButtonElement>(".tag-emotion").forEach((tag) =>
      tag.addEventListener("click", () => {
        const emotion = tag.dataset.emotion!;
        selectedTagEmotions = selectedTagEmotions.includes(emotion)
          ? selectedTagEmotions.filter((e) => e !== emotion)
          : [...selectedTagEmotions, emotion];
        void renderFeed();
      }),
    );
    root!.querySelectorAll<HTMLButtonElement>(".tag-keyword").forEach((tag) =>
      tag.addEventListener("click", () => {
        const term = tag.dataset.term!;
        selectedTagKeywords = selectedTagKeywords.includes(term)
          ? selectedTagKeywords.filter((t) => t !== term)
          : [...selectedTagKeywords, term];
        void renderFeed();
      }),
    );
    doc.getElementById("clear-tags")?.addEventListener("click", () => {
      selectedTagEmotions = [];
      selectedTagKeywords = [];
      void renderFeed();
    });
    root!.querySelectorAll<HTMLElement>(".post-card").forEach((card) =>
      card.addEventListener("click", () => void navigate(`#/post/${card.dataset.id}`)),
    );
  }

  // --- post detail and reply composer ---

  function renderReplyZone(postId: number): void {
    const zone = doc.getElementById("reply-zone");
    if (!zone) return;
    if (!reply) {
      zone.innerHTML = `<button id="start-reply">write a reply</button>`;
      doc.getElementById("start-reply")?.addEventListener("click", async () => {
        try {
          const offer = await requestTriggers(postId);
          reply = newReply(offer.phrases);
          replyPrompt = "Pick an opener that fits how their story lands with you.";
          replyNote = "";
          renderReplyZone(postId);
        } catch (error) {
          replyNote = describe(error);
          renderReplyZone(postId);
        }
      });
      return;
    }
    const flags = partFlags(reply);
    const indicator = `
      <ul class="epitome-indicator">
        <li class="${flags.hasEmotionalReaction ? "done" : "missing"}" id="flag-reaction">reaction</li>
        <li class="${flags.hasInterpretation ? "done" : "missing"}" id="flag-interpretation">interpretation</li>
        <li class="${flags.hasExploration ? "done" : "missing"}" id="flag-exploration">question</li>
      </ul>`;
    let stageHtml = "";
    if (reply.stage === "trigger") {
      stageHtml = reply.offered
        .map((phrase) => {
          const active = reply!.trigger === phrase ? " active" : "";
          return `<button class="trigger-option${active}" data-phrase="${escapeHtml(phrase)}">${escapeHtml(phrase)}</button>`;
        })
        .join("");
    } else if (reply.stage === "interpretation" || reply.stage === "exploration") {
      const value = reply.stage === "interpretation" ? reply.interpretation : reply.exploration;
      const questionHint =
        reply.stage === "exploration" && value.trim() && !value.includes("?")
          ? "<p class='note' id='question-hint'>an exploration usually asks a question (?)</p>"
          : "";
      stageHtml = `
        <textarea id="stage-text" rows="3">${escapeHtml(value)}</textarea>
        ${questionHint}`;
    } else {
      stageHtml = `
        <blockquote id="reply-preview">${escapeHtml(
          [reply.trigger.trim(), reply.interpretation.trim(), reply.exploration.trim()].join(" "),
        )}</blockquote>
        <button id="submit-comment">post reply</button>`;
    }
    zone.innerHTML = `
      ${replyPrompt ? `<p class="prompt" id="stage-prompt">${escapeHtml(replyPrompt)}</p>` : ""}
      ${indicator}
      <div id="stage-body">${stageHtml}</div>
      ${replyNote ? `<p class="note" id="reply-note">${escapeHtml(replyNote)}</p>` : ""}
      ${reply.stage !== "complete" ? `<button id="advance-btn" ${canAdvance(reply) ? "" : "disabled"}>next</button>` : ""}
    `;
    zone.querySelectorAll<HTMLButtonElement>(".trigger-option").forEach((option) =>
      option.addEventListener("click", () => {
        try {
          reply = chooseTrigger(reply!, option.dataset.phrase ?? "");
          replyNote = "";
        } catch (error) {
          replyNote = describe(error);
        }
        renderReplyZone(postId);
      }),
    );
    const stageText = doc.getElementById("stage-text") as HTMLTextAreaElement | null;
    stageText?.addEventListener("input", () => {
      if (!reply) return;
      reply =
        reply.stage === "interpretation"
          ? writeInterpretation(reply, stageText.value)
          : writeExploration(reply, stageText.value);
      const advanceBtn = doc.getElementById("advance-btn") as HTMLButtonElement | null;
      if (advanceBtn) advanceBtn.disabled = !canAdvance(reply);
      const hint = doc.getElementById("question-hint");
      const needsHint = reply.stage === "exploration" && stageText.value.trim() && !stageText.value.includes("?");
      if (hint && !needsHint) hint.remove();
    });
    doc.getElementById("advance-btn")?.addEventListener("click", () => {
      if (!reply) return;
      try {
        const result = advance(reply);
        reply = result.draft;
        replyPrompt = result.prompt ?? "Ready to send.";
        replyNote = "";
      } catch (error) {
        replyNote = describe(error);
      }
      renderReplyZone(postId);
    });
    doc.getElementById("submit-comment")?.addEventListener("click", async () => {
      if (!reply) return;
      try {
        await submitComment(postId, commentPayload(reply));
        reply = null;
        replyPrompt = null;
        replyNote = "";
        await renderPost(postId);
      } catch (error) {
        replyNote = describe(error);
        renderReplyZone(postId);
      }
    });
  }

  async function renderPost(postId: number): Promise<void> {
    let detail: PostDetail;
    try {
      detail = await fetchPost(postId);
    } catch (error) {
      root!.innerHTML = `<p id="error-banner">${escapeHtml(describe(error))}</p><a href="#/feed">back</a>`;
      return;
    }
    const comments = detail.comments
      .map(
        (comment) => `
          <li class="comment" data-id="${comment.id}">
            <p>${escapeHtml(comment.text)}</p>
            <span class="epitome-badge ${comment.epitome.complete ? "complete" : "partial"}">
              ${comment.epitome.complete ? "all three parts" : "partial reply"}
            </span>
          </li>`,
      )
      .join("");
    root!.innerHTML = `
      <a href="#/feed" id="back-link">&larr; all posts</a>
      <article id="post-detail" data-id="${detail.id}">
        <span class="emotion-label">${detail.emotion}</span>
        <p>${escapeHtml(detail.body)}</p>
        <footer>${detail.keywords.map((k) => `#${escapeHtml(k)}`).join(" ")}</footer>
      </article>
      <h3>Replies</h3>
      <ul id="comment-list">${comments || "<li class='hint' id='no-comments'>no replies yet</li>"}</ul>
      <div id="reply-zone"></div>
    `;
    renderReplyZone(postId);
  }

  // --- routing ---

  async function render(): Promise<void> {
    const hash = win.location.hash || "#/feed";
    const postMatch = /^#\/post\/(\d+)$/.exec(hash);
    if (hash === "#/compose") {
      renderCompose();
    } else if (postMatch) {
      await renderPost(Number(postMatch[1]));
    } else {
      await renderFeed();
    }
  }

  async function navigate(hash: string): Promise<void> {
    if (win.location.hash !== hash) {
      win.location.hash = hash;
    }
    await render();
  }

  win.addEventListener("hashchange", () => void render());
  void render();
  return { navigate, refresh: render };
}
