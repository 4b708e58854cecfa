// Keyword chip selection for the composer: at most three, normalized, unique.
// Normalization mirrors the server (lowercase, punctuation stripped, spaces
// collapsed) so a chip the user toggles equals what the server will store.

export const MAX_KEYWORDS = 3;

export function normalizeKeyword(raw: string): string {
  return raw
    .toLowerCase()
    .replace(/\p{P}/gu, "")
    .split(/\s+/)
    .filter(Boolean)
    .join(" ");
}

export interface ChipChange {
  selected: string[];
  error?: string;
}

export function toggleChip(selected: string[], raw: string): ChipChange {
  const term = normalizeKeyword(raw);
  if (!term) {
    return { selected, error: "keyword is empty after cleanup" };
  }
  if (selected.includes(term)) {
    return { selected: selected.filter((t) => t !== term) };
  }
  if (selected.length >= MAX_KEYWORDS) {
    return { selected, error: `at most ${MAX_KEYWORDS} keywords` };
  }
  return { selected: [...selected, term] };
}

export function addCustomKeyword(selected: string[], raw: string): ChipChange {
  const term = normalizeKeyword(raw);
  if (!term) {
    return { selected, error: "keyword is empty after cleanup" };
  }
  if (selected.includes(term)) {
    return { selected, error: "keyword already selected" };
  }
  if (selected.length >= MAX_KEYWORDS) {
    return { selected, error: `at most ${MAX_KEYWORDS} keywords` };
  }
  return { selected: [...selected, term] };
}

export function canPublish(body: string, emotion: string | null, selected: string[]): boolean {
  return body.trim().length > 0 && emotion !== null && selected.length >= 1 && selected.length <= MAX_KEYWORDS;
}
