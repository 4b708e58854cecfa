// Typed client for the board's HTTP API (see ../docs/api.md in the repo root).
// Every non-2xx response carries {code, message}; surfaced here as ApiError.

export const EMOTIONS = ["anger", "sadness", "happiness", "surprise", "fear", "distress"] as const;
export type Emotion = (typeof EMOTIONS)[number];

export interface KeywordSuggestion {
  term: string;
  score: number;
}

export interface DraftSuggestion {
  suggested_emotion: Emotion;
  confidence: number;
  distribution: Record<Emotion, number>;
  suggested_keywords: KeywordSuggestion[];
}

export interface Post {
  id: number;
  author: string;
  body: string;
  emotion: Emotion;
  keywords: string[];
  created_at: string;
}

export interface EpitomeFlags {
  has_emotional_reaction: boolean;
  has_interpretation: boolean;
  has_exploration: boolean;
  complete: boolean;
}

export interface CommentData {
  id: number;
  post_id: number;
  author: string;
  text: string;
  epitome: EpitomeFlags;
  created_at: string;
}

export interface PostDetail extends Post {
  comments: CommentData[];
}

export interface TagSets {
  emotions: Emotion[];
  keywords: string[];
}

export interface TriggerOffer {
  phrases: string[];
  provenance: ("targeted" | "generalized")[];
}

export interface CommentPayload {
  trigger: string;
  interpretation: string;
  exploration: string;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

declare global {
  interface Window {
    PEERSUPPORT_API_BASE?: string;
  }
}

function base(): string {
  return (typeof window !== "undefined" && window.PEERSUPPORT_API_BASE) || "";
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  const response = await fetch(base() + path, {
    headers: { "content-type": "application/json" },
    ...init,
  });
  const payload = await response.json().catch(() => null);
  if (!response.ok) {
    const code = payload && typeof payload.code === "string" ? payload.code : "http_error";
    const message = payload && typeof payload.message === "string" ? payload.message : response.statusText;
    throw new ApiError(response.status, code, message);
  }
  return payload as T;
}

export function analyzeDraft(body: string): Promise<DraftSuggestion> {
  return request("/drafts", { method: "POST", body: JSON.stringify({ body }) });
}

export function publishPost(body: string, emotion: Emotion, keywords: string[]): Promise<Post> {
  return request("/posts", { method: "POST", body: JSON.stringify({ body, emotion, keywords }) });
}

export function fetchFeed(emotions: string[], keywords: string[]): Promise<Post[]> {
  const params = new URLSearchParams();
  if (emotions.length) params.set("emotions", emotions.join(","));
  if (keywords.length) params.set("keywords", keywords.join(","));
  const query = params.toString();
  return request(`/posts${query ? "?" + query : ""}`);
}

export function fetchPost(id: number): Promise<PostDetail> {
  return request(`/posts/${id}`);
}

export function fetchTags(): Promise<TagSets> {
  return request("/tags");
}

export function requestTriggers(postId: number): Promise<TriggerOffer> {
  return request(`/posts/${postId}/triggers`, { method: "POST" });
}

export function submitComment(postId: number, payload: CommentPayload): Promise<CommentData> {
  return request(`/posts/${postId}/comments`, { method: "POST", body: JSON.stringify(payload) });
}
