"""Language-aware text normalization: tokenizing, stopword removal, lemma mapping.

All downstream analysis (keyword ranking, emotion classification) consumes the
token stream produced here, so normalization lives in exactly one place. A
:class:`LanguageProfile` bundles the per-language pieces: a stopword list and
an optional lemma substitution table. Profiles are plain JSON files so the
word lists can be edited without touching code.
"""

from __future__ import annotations

import json
import unicodedata
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path


class ProfileError(ValueError):
    """Raised when a language profile file is malformed."""


@dataclass(frozen=True)
class Token:
    """A normalized term plus its zero-based position in the token sequence."""

    term: str
    position: int


@dataclass(frozen=True)
class LanguageProfile:
    """Stopwords and an optional term -> lemma map for one language."""

    name: str
    stopwords: frozenset[str] = frozenset()
    lemma_map: dict[str, str] = field(default_factory=dict)


@lru_cache(maxsize=4096)
def _is_punctuation(ch: str) -> bool:
    return unicodedata.category(ch).startswith("P")


def normalize_term(raw: str) -> str:
    """Canonical form of a single term: NFC, lowercased, punctuation removed."""
    text = unicodedata.normalize("NFC", raw).lower()
    return "".join(ch for ch in text if not _is_punctuation(ch))


def tokenize(text: str, profile: LanguageProfile | None = None) -> list[Token]:
    """Split ``text`` into normalized tokens with consecutive positions.

    Tokenization itself is language neutral (``profile`` is accepted so all
    pipeline stages share one signature): NFC-normalize, lowercase, strip
    Unicode punctuation, split on whitespace. Tokens that are empty after
    stripping do not appear and do not consume a position.
    """
    del profile  # reserved for language-specific splitting rules
    tokens: list[Token] = []
    for chunk in text.split():
        term = normalize_term(chunk)
        if term:
            tokens.append(Token(term, len(tokens)))
    return tokens


def drop_stopwords(tokens: list[Token], profile: LanguageProfile) -> list[Token]:
    """Remove stopword tokens, keeping order and original positions."""
    return [tok for tok in tokens if tok.term not in profile.stopwords]


def lemmatize(tokens: list[Token], profile: LanguageProfile) -> list[Token]:
    """Map each term through the profile's lemma table (identity if absent)."""
    table = profile.lemma_map
    if not table:
        return list(tokens)
    return [Token(table.get(tok.term, tok.term), tok.position) for tok in tokens]


def load_language_profile(path: str | Path) -> LanguageProfile:
    """Load a profile from JSON: ``{"name", "stopwords": [..], "lemma_map": {..}}``.

    Stopwords and lemma entries are normalized on load, so hand-edited files
    may use any casing or stray punctuation; the loaded profile always
    satisfies ``normalize_term(word) == word`` for every stopword.
    """
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ProfileError(f"profile {path}: invalid JSON ({exc})") from exc
    if not isinstance(payload, dict):
        raise ProfileError(f"profile {path}: expected a JSON object")
    return _profile_from_payload(payload, source=str(path))


def _profile_from_payload(payload: dict, source: str) -> LanguageProfile:
    name = payload.get("name")
    if not isinstance(name, str) or not name:
        raise ProfileError(f"profile {source}: 'name' must be a non-empty string")
    raw_stopwords = payload.get("stopwords", [])
    if not isinstance(raw_stopwords, list) or not all(isinstance(w, str) for w in raw_stopwords):
        raise ProfileError(f"profile {source}: 'stopwords' must be a list of strings")
    stopwords = frozenset(filter(None, (normalize_term(w) for w in raw_stopwords)))
    raw_map = payload.get("lemma_map", {})
    if not isinstance(raw_map, dict):
        raise ProfileError(f"profile {source}: 'lemma_map' must be an object")
    lemma_map: dict[str, str] = {}
    for key, value in raw_map.items():
        if not isinstance(key, str) or not isinstance(value, str):
            raise ProfileError(f"profile {source}: lemma_map entries must map string to string")
        norm_key, norm_value = normalize_term(key), normalize_term(value)
        if not norm_key or not norm_value:
            raise ProfileError(
                f"profile {source}: lemma_map entry {key!r} -> {value!r} is empty after normalization"
            )
        lemma_map[norm_key] = norm_value
    return LanguageProfile(name=name, stopwords=stopwords, lemma_map=lemma_map)


def default_profile() -> LanguageProfile:
    """The English profile shipped with the package."""
    payload = json.loads(
        resources.files("peersupport.data").joinpath("profile_en.json").read_text(encoding="utf-8")
    )
    return _profile_from_payload(payload, source="peersupport/data/profile_en.json")
