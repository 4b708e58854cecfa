"""Scaffolding for empathetic replies: trigger phrases and a staged composer.

A reply is built in three parts. First a short emotional-reaction phrase (the
"trigger") chosen from a curated bank, then the commenter's own restatement of
the situation (interpretation), then a question back to the writer
(exploration). The stage machine walks those parts in order and never lets a
draft complete with a missing part; :func:`check_epitome` reports which parts
a draft actually carries, using a question mark as the exploration heuristic.

Phrase banks hold three targeted phrases per emotion plus exactly two
generalized phrases usable for any negative emotion. They live in editable
JSON files; the copy shipped here is demo filler, not vetted counseling
language.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .emoclass import LABELS, LABEL_SET

NEGATIVE_EMOTIONS = frozenset({"anger", "sadness", "fear", "distress"})

TARGETED_PER_EMOTION = 3
GENERALIZED_COUNT = 2

STAGES = ("trigger", "interpretation", "exploration", "complete")

INTERPRETATION_PROMPT = "Put what the writer is going through into your own words."
EXPLORATION_PROMPT = "Ask the writer a question about something their post leaves open."


class ScaffoldError(ValueError):
    """Raised on stage-machine misuse or an invalid phrase bank."""


@dataclass(frozen=True)
class PhraseBank:
    """Three targeted phrases per emotion plus two generalized phrases."""

    targeted: dict[str, tuple[str, ...]]
    generalized: tuple[str, ...]


@dataclass(frozen=True)
class TriggerRecommendation:
    """Phrases offered for one draft; provenance entries are 'targeted' or 'generalized'."""

    phrases: tuple[str, ...]
    provenance: tuple[str, ...]


@dataclass
class CommentDraft:
    """Mutable working state of one reply; advances only via :func:`next_prompt`."""

    post_id: int
    offered: tuple[str, ...]
    trigger: str = ""
    interpretation: str = ""
    exploration: str = ""
    stage: str = "trigger"


@dataclass(frozen=True)
class EpitomeReport:
    has_emotional_reaction: bool
    has_interpretation: bool
    has_exploration: bool
    complete: bool


def validate_phrase_bank(bank: PhraseBank) -> None:
    """Reject banks with wrong counts, unknown labels, blanks or duplicates."""
    for label in LABELS:
        if label not in bank.targeted:
            raise ScaffoldError(f"targeted missing label {label}")
    for label in bank.targeted:
        if label not in LABEL_SET:
            raise ScaffoldError(f"targeted has unknown label {label!r}")
    for label, phrases in bank.targeted.items():
        if len(phrases) != TARGETED_PER_EMOTION:
            raise ScaffoldError(f"targeted[{label}] has {len(phrases)}, expected {TARGETED_PER_EMOTION}")
        if any(not p.strip() for p in phrases):
            raise ScaffoldError(f"targeted[{label}] contains an empty phrase")
        if len(set(phrases)) != len(phrases):
            raise ScaffoldError(f"targeted[{label}] has duplicate phrases")
    if len(bank.generalized) != GENERALIZED_COUNT:
        raise ScaffoldError(f"generalized has {len(bank.generalized)}, expected {GENERALIZED_COUNT}")
    if any(not p.strip() for p in bank.generalized):
        raise ScaffoldError("generalized contains an empty phrase")
    if len(set(bank.generalized)) != len(bank.generalized):
        raise ScaffoldError("generalized has duplicate phrases")


def _bank_from_payload(payload: dict, source: str) -> PhraseBank:
    if not isinstance(payload, dict):
        raise ScaffoldError(f"phrase bank {source}: expected a JSON object")
    raw_targeted = payload.get("targeted")
    raw_generalized = payload.get("generalized")
    if not isinstance(raw_targeted, dict) or not isinstance(raw_generalized, list):
        raise ScaffoldError(f"phrase bank {source}: needs 'targeted' object and 'generalized' list")
    targeted = {label: tuple(phrases) for label, phrases in raw_targeted.items()}
    bank = PhraseBank(targeted=targeted, generalized=tuple(raw_generalized))
    validate_phrase_bank(bank)
    return bank


def load_phrase_bank(path: str | Path) -> PhraseBank:
    """Load and validate a phrase bank JSON file."""
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ScaffoldError(f"phrase bank {path}: invalid JSON ({exc})") from exc
    return _bank_from_payload(payload, source=str(path))


def default_phrase_bank() -> PhraseBank:
    """The placeholder bank shipped with the package."""
    payload = json.loads(
        resources.files("peersupport.data").joinpath("phrase_bank.json").read_text(encoding="utf-8")
    )
    return _bank_from_payload(payload, source="peersupport/data/phrase_bank.json")


def eligible_phrases(bank: PhraseBank, emotion: str) -> tuple[str, ...]:
    """Every phrase a draft for ``emotion`` may legally use as its trigger."""
    if emotion not in LABEL_SET:
        raise ScaffoldError(f"unknown emotion {emotion!r}")
    if emotion in NEGATIVE_EMOTIONS:
        return bank.targeted[emotion] + bank.generalized
    return bank.targeted[emotion]


def recommend_triggers(bank: PhraseBank, emotion: str, seed: int) -> TriggerRecommendation:
    """Pick trigger phrases for ``emotion``, deterministically for a given seed.

    Negative emotions (anger, sadness, fear, distress) get two distinct
    targeted phrases drawn uniformly without replacement plus one of the two
    generalized phrases, uniformly. The remaining emotions have no
    generalized pool, so all three targeted phrases are offered.
    """
    if emotion not in LABEL_SET:
        raise ScaffoldError(f"unknown emotion {emotion!r}")
    rng = random.Random(seed)
    targeted = bank.targeted[emotion]
    if emotion in NEGATIVE_EMOTIONS:
        picked = rng.sample(targeted, 2)
        picked.append(rng.choice(bank.generalized))
        return TriggerRecommendation(
            phrases=tuple(picked), provenance=("targeted", "targeted", "generalized")
        )
    return TriggerRecommendation(phrases=targeted, provenance=("targeted",) * TARGETED_PER_EMOTION)


def new_draft(post_id: int, offered: tuple[str, ...]) -> CommentDraft:
    return CommentDraft(post_id=post_id, offered=offered)


def choose_trigger(draft: CommentDraft, phrase: str) -> None:
    """Set the trigger; only legal at the trigger stage and from ``offered``."""
    if draft.stage != "trigger":
        raise ScaffoldError(f"cannot choose a trigger at stage {draft.stage}")
    if phrase not in draft.offered:
        raise ScaffoldError("trigger not among offered phrases")
    draft.trigger = phrase


def write_interpretation(draft: CommentDraft, text: str) -> None:
    if draft.stage != "interpretation":
        raise ScaffoldError(f"cannot write interpretation at stage {draft.stage}")
    draft.interpretation = text


def write_exploration(draft: CommentDraft, text: str) -> None:
    if draft.stage != "exploration":
        raise ScaffoldError(f"cannot write exploration at stage {draft.stage}")
    draft.exploration = text


_STAGE_FIELDS = {
    "trigger": "trigger",
    "interpretation": "interpretation",
    "exploration": "exploration",
}


def next_prompt(draft: CommentDraft) -> str | None:
    """Advance one stage and return the prompt for the new stage.

    The current stage's input must be non-blank, otherwise the draft stays
    put and an error explains which input is missing. The final transition
    (exploration done) returns ``None``.
    """
    if draft.stage == "complete":
        raise ScaffoldError("draft is already complete")
    current = getattr(draft, _STAGE_FIELDS[draft.stage])
    if not current.strip():
        raise ScaffoldError(f"stage input required: {draft.stage}")
    if draft.stage == "trigger":
        draft.stage = "interpretation"
        return INTERPRETATION_PROMPT
    if draft.stage == "interpretation":
        draft.stage = "exploration"
        return EXPLORATION_PROMPT
    draft.stage = "complete"
    return None


def check_epitome(draft: CommentDraft) -> EpitomeReport:
    """Which reply parts the draft carries; exploration must contain a question mark."""
    reaction = bool(draft.trigger.strip())
    interpretation = bool(draft.interpretation.strip())
    exploration = bool(draft.exploration.strip()) and "?" in draft.exploration
    return EpitomeReport(
        has_emotional_reaction=reaction,
        has_interpretation=interpretation,
        has_exploration=exploration,
        complete=reaction and interpretation and exploration,
    )


def compose_comment(draft: CommentDraft) -> str:
    """Join the three parts into the posted comment text."""
    if draft.stage != "complete":
        raise ScaffoldError(f"draft is not complete (stage {draft.stage})")
    return " ".join(part.strip() for part in (draft.trigger, draft.interpretation, draft.exploration))
