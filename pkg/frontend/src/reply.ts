// Client-side mirror of the server's reply stage machine. The composer only
// ever submits a payload produced by commentPayload(), which exists solely
// for completed drafts, so the server never sees a staged payload it would
// reject.

export type Stage = "trigger" | "interpretation" | "exploration" | "complete";

export interface ReplyDraft {
  stage: Stage;
  offered: string[];
  trigger: string;
  interpretation: string;
  exploration: string;
}

export const INTERPRETATION_PROMPT = "Put what the writer is going through into your own words.";
export const EXPLORATION_PROMPT = "Ask the writer a question about something their post leaves open.";

export function newReply(offered: string[]): ReplyDraft {
  return { stage: "trigger", offered: [...offered], trigger: "", interpretation: "", exploration: "" };
}

export function chooseTrigger(draft: ReplyDraft, phrase: string): ReplyDraft {
  if (draft.stage !== "trigger") {
    throw new Error(`cannot choose a trigger at stage ${draft.stage}`);
  }
  if (!draft.offered.includes(phrase)) {
    throw new Error("trigger not among offered phrases");
  }
  return { ...draft, trigger: phrase };
}

export function writeInterpretation(draft: ReplyDraft, text: string): ReplyDraft {
  if (draft.stage !== "interpretation") {
    throw new Error(`cannot write interpretation at stage ${draft.stage}`);
  }
  return { ...draft, interpretation: text };
}

export function writeExploration(draft: ReplyDraft, text: string): ReplyDraft {
  if (draft.stage !== "exploration") {
    throw new Error(`cannot write exploration at stage ${draft.stage}`);
  }
  return { ...draft, exploration: text };
}

const STAGE_FIELD: Record<Exclude<Stage, "complete">, keyof ReplyDraft> = {
  trigger: "trigger",
  interpretation: "interpretation",
  exploration: "exploration",
};

export function canAdvance(draft: ReplyDraft): boolean {
  if (draft.stage === "complete") return false;
  return (draft[STAGE_FIELD[draft.stage]] as string).trim().length > 0;
}

export interface AdvanceResult {
  draft: ReplyDraft;
  prompt: string | null;
}

export function advance(draft: ReplyDraft): AdvanceResult {
  if (draft.stage === "complete") {
    throw new Error("draft is already complete");
  }
  if (!canAdvance(draft)) {
    throw new Error(`stage input required: ${draft.stage}`);
  }
  if (draft.stage === "trigger") {
    return { draft: { ...draft, stage: "interpretation" }, prompt: INTERPRETATION_PROMPT };
  }
  if (draft.stage === "interpretation") {
    return { draft: { ...draft, stage: "exploration" }, prompt: EXPLORATION_PROMPT };
  }
  return { draft: { ...draft, stage: "complete" }, prompt: null };
}

export interface PartFlags {
  hasEmotionalReaction: boolean;
  hasInterpretation: boolean;
  hasExploration: boolean;
  complete: boolean;
}

// Mirrors the server's report: exploration only counts with a question mark.
export function partFlags(draft: ReplyDraft): PartFlags {
  const reaction = draft.trigger.trim().length > 0;
  const interpretation = draft.interpretation.trim().length > 0;
  const exploration = draft.exploration.trim().length > 0 && draft.exploration.includes("?");
  return {
    hasEmotionalReaction: reaction,
    hasInterpretation: interpretation,
    hasExploration: exploration,
    complete: reaction && interpretation && exploration,
  };
}

export function commentPayload(draft: ReplyDraft): {
  trigger: string;
  interpretation: string;
  exploration: string;
} {
  if (draft.stage !== "complete") {
    throw new Error(`draft is not complete (stage ${draft.stage})`);
  }
  return {
    trigger: draft.trigger,
    interpretation: draft.interpretation,
    exploration: draft.exploration,
  };
}
