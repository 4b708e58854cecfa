"""Synthetic fixtures: a separable training corpus and demo board content.

The corpus generator draws each document's words from a vocabulary that is
unique to its label (no overlap between labels, none of the words are
stopwords or lemma-map entries), so a bag-of-terms classifier should get the
label right essentially always. That makes it a fitness check for the
training pipeline, not a claim about real-world accuracy.
"""

from __future__ import annotations

import random

from .community import CommunityStore, PostDraft, new_anonymous_id
from .emoclass import LabeledCorpus, make_corpus
from .scaffold import (
    PhraseBank,
    choose_trigger,
    eligible_phrases,
    new_draft,
    next_prompt,
    write_exploration,
    write_interpretation,
)

LABEL_VOCABULARY: dict[str, tuple[str, ...]] = {
    "anger": (
        "fuming", "seething", "irate", "livid", "outraged", "resentful",
        "snapped", "yelling", "slammed", "boiling", "grudge", "furious",
    ),
    "sadness": (
        "mourning", "weeping", "heartbroken", "gloomy", "sorrowful", "tearful",
        "lonely", "downcast", "grieving", "blue", "hollow", "aching",
    ),
    "happiness": (
        "delighted", "cheerful", "grinning", "thrilled", "sunshine", "celebrating",
        "grateful", "beaming", "joyful", "upbeat", "laughing", "glowing",
    ),
    "surprise": (
        "astonished", "stunned", "unexpected", "startled", "sudden", "shocking",
        "twist", "gasped", "unbelievable", "speechless", "jolt", "blindsided",
    ),
    "fear": (
        "terrified", "dreading", "panicking", "trembling", "nightmare", "scared",
        "haunted", "shivering", "paralyzed", "frightened", "spooked", "jumpy",
    ),
    "distress": (
        "overwhelmed", "drowning", "exhausted", "burnout", "swamped", "pressured",
        "frantic", "strained", "stretched", "crushing", "overloaded", "buckling",
    ),
}


def make_separable_corpus(
    docs_per_label: int = 50,
    seed: int = 0,
    min_words: int = 5,
    max_words: int = 12,
) -> LabeledCorpus:
    """Documents whose words come only from their own label's vocabulary."""
    rng = random.Random(seed)
    records: list[tuple[str, str]] = []
    for label, vocabulary in LABEL_VOCABULARY.items():
        for _ in range(docs_per_label):
            length = rng.randint(min_words, max_words)
            records.append((" ".join(rng.choices(vocabulary, k=length)), label))
    return make_corpus(records)


DEMO_POSTS: tuple[tuple[str, str, tuple[str, ...]], ...] = (
    (
        "Exam season again and the deadlines keep stacking up, I can barely sleep.",
        "distress",
        ("exam", "deadlines", "sleep"),
    ),
    (
        "My best friend moved away this week and the apartment feels so empty now.",
        "sadness",
        ("friend", "moving"),
    ),
    (
        "Finally passed the certification I failed twice before!",
        "happiness",
        ("certification",),
    ),
    (
        "My roommate keeps taking my things without asking and denies it every time.",
        "anger",
        ("roommate", "boundaries"),
    ),
    (
        "The doctor wants extra tests after my checkup and won't say why yet.",
        "fear",
        ("health", "tests"),
    ),
    (
        "Got called into a meeting and was handed a promotion out of nowhere.",
        "surprise",
        ("work", "promotion"),
    ),
)


def seed_demo_store(store: CommunityStore, bank: PhraseBank) -> None:
    """Publish a small board (one post per emotion, one scaffolded comment)."""
    first_id: int | None = None
    for body, emotion, keywords in DEMO_POSTS:
        draft = PostDraft(author=new_anonymous_id(), body=body)
        post = store.publish_post(draft, emotion, list(keywords))
        if first_id is None:
            first_id = post.id
    assert first_id is not None
    reply = new_draft(first_id, eligible_phrases(bank, store.get_post(first_id).emotion))
    choose_trigger(reply, reply.offered[0])
    next_prompt(reply)
    write_interpretation(reply, "It sounds like the workload and lost sleep are feeding each other.")
    next_prompt(reply)
    write_exploration(reply, "Which deadline is weighing on you the most right now?")
    next_prompt(reply)
    store.add_comment(reply)
