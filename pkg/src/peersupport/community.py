"""Anonymous post board: drafts, publishing, tag filtering, scaffolded comments.

Authors are opaque anonymous ids, never names. A post is published from a
draft whose suggested emotion and keywords the author may freely override;
the stored post keeps only the confirmed values. The feed filter treats
selected tags as a union: a post shows when its emotion matches any selected
emotion or it shares any selected keyword. Stores snapshot to JSON and load
back to an identical state.
"""

from __future__ import annotations

import json
import uuid
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Callable

from .emoclass import LABEL_SET, EmotionModel, predict
from .keyrank import KeywordCandidate, RankConfig, extract_keywords
from .scaffold import CommentDraft, EpitomeReport, check_epitome, compose_comment
from .textproc import LanguageProfile, normalize_term

SCHEMA_VERSION = 1
MAX_POST_KEYWORDS = 3

AnonymousId = str


class ValidationError(ValueError):
    """User-correctable input problem, with a machine-readable code."""

    def __init__(self, message: str, code: str):
        super().__init__(message)
        self.code = code


class NotFoundError(LookupError):
    """Referenced post or comment does not exist."""


class StoreError(ValueError):
    """Snapshot file is unreadable or structurally invalid."""


def new_anonymous_id() -> AnonymousId:
    return uuid.uuid4().hex[:12]


@dataclass(frozen=True)
class PostDraft:
    """Pre-publish state: body plus analysis suggestions the author may override."""

    author: AnonymousId
    body: str
    suggested_emotion: str | None = None
    suggested_keywords: tuple[KeywordCandidate, ...] = ()
    confidence: float | None = None
    distribution: dict[str, float] | None = None


@dataclass(frozen=True)
class Post:
    id: int
    author: AnonymousId
    body: str
    emotion: str
    keywords: tuple[str, ...]
    created_at: datetime


@dataclass(frozen=True)
class Comment:
    id: int
    post_id: int
    author: AnonymousId
    text: str
    epitome: EpitomeReport
    created_at: datetime


@dataclass(frozen=True)
class FeedFilter:
    """Selected emotion and keyword tags; empty selection means no filtering."""

    emotions: frozenset[str] = frozenset()
    keywords: frozenset[str] = frozenset()

    def matches(self, post: Post) -> bool:
        if not self.emotions and not self.keywords:
            return True
        if post.emotion in self.emotions:
            return True
        return bool(self.keywords.intersection(post.keywords))


@dataclass(frozen=True)
class TagVocabulary:
    emotions: frozenset[str]
    keywords: frozenset[str]


def analyze_draft(
    body: str,
    model: EmotionModel | None,
    profile: LanguageProfile,
    rank_config: RankConfig = RankConfig(),
    author: AnonymousId | None = None,
) -> PostDraft:
    """Suggest an emotion and up to three keywords for a post body."""
    if model is None:
        raise ValidationError(
            "no emotion model is loaded; train one first (see the train command)",
            code="model_not_trained",
        )
    prediction = predict(model, body, profile)
    keywords = tuple(extract_keywords(body, profile, rank_config))
    return PostDraft(
        author=author or new_anonymous_id(),
        body=body,
        suggested_emotion=prediction.label,
        suggested_keywords=keywords,
        confidence=prediction.confidence,
        distribution=prediction.distribution,
    )


def normalize_keyword(raw: str) -> str:
    """Keyword form used for storage and matching: per-word normalization, single spaces."""
    return " ".join(filter(None, (normalize_term(part) for part in raw.split())))


def _utcnow() -> datetime:
    return datetime.now(timezone.utc)


@dataclass
class CommunityStore:
    """In-memory board state; equality covers everything a snapshot persists."""

    posts: dict[int, Post] = field(default_factory=dict)
    comments: dict[int, Comment] = field(default_factory=dict)
    next_post_id: int = 1
    next_comment_id: int = 1
    clock: Callable[[], datetime] = field(default=_utcnow, compare=False, repr=False)
    _last_ts: datetime | None = field(default=None, compare=False, repr=False)

    def _now(self) -> datetime:
        ts = self.clock()
        if self._last_ts is not None and ts < self._last_ts:
            ts = self._last_ts
        self._last_ts = ts
        return ts

    def publish_post(
        self,
        draft: PostDraft,
        emotion: str,
        keywords: list[str] | tuple[str, ...],
    ) -> Post:
        """Validate the confirmed tags and persist a new post.

        Keywords are normalized, blanks dropped and duplicates removed before
        the 1..3 count rule is checked.
        """
        if not draft.body.strip():
            raise ValidationError("post body is empty", code="empty_body")
        if emotion not in LABEL_SET:
            raise ValidationError(f"unknown emotion {emotion!r}", code="unknown_emotion")
        cleaned: list[str] = []
        for raw in keywords:
            term = normalize_keyword(raw)
            if term and term not in cleaned:
                cleaned.append(term)
        if not cleaned:
            raise ValidationError("a post needs at least one keyword", code="no_keywords")
        if len(cleaned) > MAX_POST_KEYWORDS:
            raise ValidationError(
                f"a post carries at most {MAX_POST_KEYWORDS} keywords, got {len(cleaned)}",
                code="too_many_keywords",
            )
        post = Post(
            id=self.next_post_id,
            author=draft.author,
            body=draft.body,
            emotion=emotion,
            keywords=tuple(cleaned),
            created_at=self._now(),
        )
        self.posts[post.id] = post
        self.next_post_id += 1
        return post

    def get_post(self, post_id: int) -> Post:
        try:
            return self.posts[post_id]
        except KeyError:
            raise NotFoundError(f"no post with id {post_id}") from None

    def delete_post(self, post_id: int) -> None:
        """Remove a post and every comment attached to it."""
        self.get_post(post_id)
        del self.posts[post_id]
        self.comments = {
            cid: comment for cid, comment in self.comments.items() if comment.post_id != post_id
        }

    def list_posts(self, feed_filter: FeedFilter | None = None) -> list[Post]:
        """Matching posts, newest first (created_at, then id, descending)."""
        selected = self.posts.values()
        if feed_filter is not None:
            selected = [post for post in selected if feed_filter.matches(post)]
        return sorted(selected, key=lambda p: (p.created_at, p.id), reverse=True)

    def tag_vocabulary(self) -> TagVocabulary:
        """Every emotion and keyword currently in use, recomputed from stored posts."""
        emotions: set[str] = set()
        keywords: set[str] = set()
        for post in self.posts.values():
            emotions.add(post.emotion)
            keywords.update(post.keywords)
        return TagVocabulary(emotions=frozenset(emotions), keywords=frozenset(keywords))

    def add_comment(self, draft: CommentDraft, author: AnonymousId | None = None) -> Comment:
        """Attach a completed reply draft to its post."""
        post = self.get_post(draft.post_id)
        if draft.stage != "complete":
            raise ValidationError(
                f"comment draft is not complete (stage {draft.stage})", code="incomplete_draft"
            )
        comment = Comment(
            id=self.next_comment_id,
            post_id=post.id,
            author=author or new_anonymous_id(),
            text=compose_comment(draft),
            epitome=check_epitome(draft),
            created_at=self._now(),
        )
        self.comments[comment.id] = comment
        self.next_comment_id += 1
        return comment

    def comments_for(self, post_id: int) -> list[Comment]:
        """Comments on one post in reading order (oldest first)."""
        self.get_post(post_id)
        found = [c for c in self.comments.values() if c.post_id == post_id]
        return sorted(found, key=lambda c: (c.created_at, c.id))


def save_store(store: CommunityStore, path: str | Path) -> None:
    """Write a JSON snapshot that :func:`load_store` restores exactly."""
    payload = {
        "schema_version": SCHEMA_VERSION,
        "next_post_id": store.next_post_id,
        "next_comment_id": store.next_comment_id,
        "posts": [
            {
                "id": p.id,
                "author": p.author,
                "body": p.body,
                "emotion": p.emotion,
                "keywords": list(p.keywords),
                "created_at": p.created_at.isoformat(),
            }
            for p in store.posts.values()
        ],
        "comments": [
            {
                "id": c.id,
                "post_id": c.post_id,
                "author": c.author,
                "text": c.text,
                "epitome": {
                    "has_emotional_reaction": c.epitome.has_emotional_reaction,
                    "has_interpretation": c.epitome.has_interpretation,
                    "has_exploration": c.epitome.has_exploration,
                    "complete": c.epitome.complete,
                },
                "created_at": c.created_at.isoformat(),
            }
            for c in store.comments.values()
        ],
    }
    Path(path).write_text(json.dumps(payload, indent=2), encoding="utf-8")


def load_store(path: str | Path, clock: Callable[[], datetime] = _utcnow) -> CommunityStore:
    """Read a snapshot back; errors carry the JSON position or the offending field."""
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise StoreError(
            f"store {path}: invalid JSON at line {exc.lineno} column {exc.colno} (char {exc.pos})"
        ) from exc
    if not isinstance(payload, dict):
        raise StoreError(f"store {path}: expected a JSON object")
    version = payload.get("schema_version")
    if version != SCHEMA_VERSION:
        raise StoreError(f"store {path}: schema_version {version!r}, expected {SCHEMA_VERSION}")
    store = CommunityStore(clock=clock)
    try:
        store.next_post_id = int(payload["next_post_id"])
        store.next_comment_id = int(payload["next_comment_id"])
        for entry in payload["posts"]:
            post = Post(
                id=int(entry["id"]),
                author=str(entry["author"]),
                body=str(entry["body"]),
                emotion=str(entry["emotion"]),
                keywords=tuple(entry["keywords"]),
                created_at=datetime.fromisoformat(entry["created_at"]),
            )
            store.posts[post.id] = post
        for entry in payload["comments"]:
            epitome = entry["epitome"]
            comment = Comment(
                id=int(entry["id"]),
                post_id=int(entry["post_id"]),
                author=str(entry["author"]),
                text=str(entry["text"]),
                epitome=EpitomeReport(
                    has_emotional_reaction=bool(epitome["has_emotional_reaction"]),
                    has_interpretation=bool(epitome["has_interpretation"]),
                    has_exploration=bool(epitome["has_exploration"]),
                    complete=bool(epitome["complete"]),
                ),
                created_at=datetime.fromisoformat(entry["created_at"]),
            )
            store.comments[comment.id] = comment
    except (KeyError, TypeError, ValueError) as exc:
        raise StoreError(f"store {path}: missing or malformed field ({exc})") from exc
    for comment in store.comments.values():
        if comment.post_id not in store.posts:
            raise StoreError(
                f"store {path}: comment {comment.id} references missing post {comment.post_id}"
            )
    timestamps = [p.created_at for p in store.posts.values()]
    timestamps += [c.created_at for c in store.comments.values()]
    store._last_ts = max(timestamps, default=None)
    return store
