"""HTTP face of the board: drafts, posts, tags, triggers, comments.

Every route returns structured JSON, including every failure path: domain
validation problems map to 400 with a machine-readable ``code``, missing
resources to 404, and an absent emotion model to 503. Store mutations are
serialized behind one lock; when the service was started with a store path,
each successful mutation rewrites the snapshot.

Trigger sampling honors the configured seed mode: ``fixed`` derives a stable
per-post seed (so repeated requests offer the same phrases), ``entropy``
draws fresh randomness per request.
"""

from __future__ import annotations

import hashlib
import secrets
import threading
from dataclasses import dataclass, field
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel
from starlette.exceptions import HTTPException as StarletteHTTPException

from .community import (
    Comment,
    CommunityStore,
    FeedFilter,
    NotFoundError,
    Post,
    PostDraft,
    ValidationError,
    analyze_draft,
    new_anonymous_id,
    normalize_keyword,
    save_store,
)
from .config import ServiceConfig
from .emoclass import LABEL_SET, EmotionModel, load_model
from .keyrank import RankConfig
from .scaffold import (
    PhraseBank,
    ScaffoldError,
    choose_trigger,
    default_phrase_bank,
    eligible_phrases,
    load_phrase_bank,
    new_draft,
    next_prompt,
    recommend_triggers,
    write_exploration,
    write_interpretation,
)
from .textproc import LanguageProfile, default_profile, load_language_profile


@dataclass
class AppState:
    """Shared service state; the lock serializes all store mutations."""

    store: CommunityStore
    profile: LanguageProfile
    bank: PhraseBank
    model: EmotionModel | None = None
    rank_config: RankConfig = field(default_factory=RankConfig)
    seed_mode: str = "fixed"
    seed: int = 0
    store_path: Path | None = None
    lock: threading.Lock = field(default_factory=threading.Lock)

    def persist(self) -> None:
        if self.store_path is not None:
            save_store(self.store, self.store_path)

    def trigger_seed(self, post_id: int) -> int:
        if self.seed_mode == "entropy":
            return secrets.randbits(63)
        digest = hashlib.sha256(f"{self.seed}:{post_id}".encode("utf-8")).digest()
        return int.from_bytes(digest[:8], "big")


def build_state(config: ServiceConfig) -> AppState:
    """Resolve configured paths into a ready AppState.

    Configured model/profile/bank files must exist; the store file may not
    exist yet (it is created on first write). Unset profile and bank paths
    fall back to the packaged defaults; an unset model path leaves draft
    analysis unavailable until a model is trained.
    """
    for label, value in (
        ("model_path", config.model_path),
        ("profile_path", config.profile_path),
        ("phrase_bank_path", config.phrase_bank_path),
    ):
        if value is not None and not Path(value).is_file():
            raise FileNotFoundError(f"{label} does not exist: {value}")
    profile = load_language_profile(config.profile_path) if config.profile_path else default_profile()
    bank = load_phrase_bank(config.phrase_bank_path) if config.phrase_bank_path else default_phrase_bank()
    model = load_model(config.model_path) if config.model_path else None
    store = CommunityStore()
    store_path: Path | None = None
    if config.store_path:
        store_path = Path(config.store_path)
        if store_path.is_file():
            from .community import load_store

            store = load_store(store_path)
    return AppState(
        store=store,
        profile=profile,
        bank=bank,
        model=model,
        rank_config=config.rank,
        seed_mode=config.seed_mode,
        seed=config.seed,
        store_path=store_path,
    )


class DraftRequest(BaseModel):
    body: str


class PublishRequest(BaseModel):
    body: str
    emotion: str
    keywords: list[str]


class CommentRequest(BaseModel):
    trigger: str
    interpretation: str
    exploration: str


def _error(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"code": code, "message": message})


def _post_json(post: Post) -> dict:
    return {
        "id": post.id,
        "author": post.author,
        "body": post.body,
        "emotion": post.emotion,
        "keywords": list(post.keywords),
        "created_at": post.created_at.isoformat(),
    }


def _comment_json(comment: Comment) -> dict:
    return {
        "id": comment.id,
        "post_id": comment.post_id,
        "author": comment.author,
        "text": comment.text,
        "epitome": {
            "has_emotional_reaction": comment.epitome.has_emotional_reaction,
            "has_interpretation": comment.epitome.has_interpretation,
            "has_exploration": comment.epitome.has_exploration,
            "complete": comment.epitome.complete,
        },
        "created_at": comment.created_at.isoformat(),
    }


def _parse_tag_list(raw: str | None) -> list[str]:
    if not raw:
        return []
    return [part.strip() for part in raw.split(",") if part.strip()]


def create_app(state: AppState) -> FastAPI:
    app = FastAPI(title="peersupport", docs_url="/docs")

    @app.exception_handler(RequestValidationError)
    async def malformed_request(_: Request, exc: RequestValidationError) -> JSONResponse:
        return _error(400, "invalid_request", str(exc.errors()[:3]))

    @app.exception_handler(StarletteHTTPException)
    async def http_exception(_: Request, exc: StarletteHTTPException) -> JSONResponse:
        # covers framework-raised cases: undecodable bodies, unknown routes, bad methods
        code = {400: "invalid_request", 404: "not_found", 405: "method_not_allowed"}.get(
            exc.status_code, "http_error"
        )
        return _error(exc.status_code, code, str(exc.detail))

    @app.exception_handler(ValidationError)
    async def domain_validation(_: Request, exc: ValidationError) -> JSONResponse:
        status = 503 if exc.code == "model_not_trained" else 400
        return _error(status, exc.code, str(exc))

    @app.exception_handler(NotFoundError)
    async def missing_resource(_: Request, exc: NotFoundError) -> JSONResponse:
        return _error(404, "not_found", str(exc))

    @app.exception_handler(Exception)
    async def unhandled(_: Request, exc: Exception) -> JSONResponse:
        return _error(500, "internal_error", exc.__class__.__name__)

    @app.get("/health")
    def health() -> dict:
        """Liveness plus a hint whether draft analysis is available."""
        return {"status": "ok", "model_loaded": state.model is not None}

    @app.post("/drafts")
    def create_draft(request: DraftRequest) -> dict:
        """Analyze a body: suggested emotion with distribution, suggested keywords."""
        draft = analyze_draft(request.body, state.model, state.profile, state.rank_config)
        return {
            "suggested_emotion": draft.suggested_emotion,
            "confidence": draft.confidence,
            "distribution": draft.distribution,
            "suggested_keywords": [
                {"term": kw.term, "score": kw.score} for kw in draft.suggested_keywords
            ],
        }

    @app.post("/posts", status_code=201)
    def publish(request: PublishRequest) -> dict:
        """Publish with author-confirmed emotion and keywords (1..3 after cleanup)."""
        draft = PostDraft(author=new_anonymous_id(), body=request.body)
        with state.lock:
            post = state.store.publish_post(draft, request.emotion, request.keywords)
            state.persist()
        return _post_json(post)

    @app.get("/posts")
    def feed(emotions: str | None = None, keywords: str | None = None) -> list[dict]:
        """Newest-first feed; comma-separated tag filters combine as a union."""
        selected_emotions = _parse_tag_list(emotions)
        for emotion in selected_emotions:
            if emotion not in LABEL_SET:
                raise ValidationError(f"unknown emotion {emotion!r}", code="unknown_emotion")
        feed_filter = FeedFilter(
            emotions=frozenset(selected_emotions),
            keywords=frozenset(normalize_keyword(k) for k in _parse_tag_list(keywords)),
        )
        with state.lock:
            posts = state.store.list_posts(feed_filter)
        return [_post_json(post) for post in posts]

    @app.get("/posts/{post_id}")
    def post_detail(post_id: int) -> dict:
        with state.lock:
            post = state.store.get_post(post_id)
            comments = state.store.comments_for(post_id)
        payload = _post_json(post)
        payload["comments"] = [_comment_json(c) for c in comments]
        return payload

    @app.get("/tags")
    def tags() -> dict:
        """Tag vocabulary over all stored posts, sorted for stable output."""
        with state.lock:
            vocabulary = state.store.tag_vocabulary()
        return {
            "emotions": sorted(vocabulary.emotions),
            "keywords": sorted(vocabulary.keywords),
        }

    @app.post("/posts/{post_id}/triggers")
    def triggers(post_id: int) -> dict:
        with state.lock:
            post = state.store.get_post(post_id)
        recommendation = recommend_triggers(state.bank, post.emotion, state.trigger_seed(post_id))
        return {
            "phrases": list(recommendation.phrases),
            "provenance": list(recommendation.provenance),
        }

    @app.post("/posts/{post_id}/comments", status_code=201)
    def comment(post_id: int, request: CommentRequest) -> dict:
        """Run the reply stage machine server-side, then store the comment."""
        with state.lock:
            post = state.store.get_post(post_id)
            draft = new_draft(post_id, eligible_phrases(state.bank, post.emotion))
            try:
                choose_trigger(draft, request.trigger)
            except ScaffoldError as exc:
                raise ValidationError(str(exc), code="invalid_trigger") from exc
            try:
                next_prompt(draft)
                write_interpretation(draft, request.interpretation)
                next_prompt(draft)
                write_exploration(draft, request.exploration)
                next_prompt(draft)
            except ScaffoldError as exc:
                raise ValidationError(str(exc), code="incomplete_draft") from exc
            stored = state.store.add_comment(draft)
            state.persist()
        return _comment_json(stored)

    return app


def create_app_from_config(config: ServiceConfig) -> FastAPI:
    """Convenience entry point used by the serve command."""
    return create_app(build_state(config))
