"""Six-way emotion classification with a multinomial naive Bayes model.

Labels are fixed: anger, sadness, happiness, surprise, fear, distress (also
the tie-break order for predictions). Texts are reduced to bags of terms via
the shared pipeline (tokenize, drop stopwords, lemmatize); likelihoods use
additive smoothing so unseen term/label pairs never zero out a class. Terms
outside the training vocabulary are skipped at prediction time.

Corpora are UTF-8 text files with one ``label<TAB>text`` record per line;
trained models persist as JSON.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from pathlib import Path

from .textproc import LanguageProfile, drop_stopwords, lemmatize, tokenize

LABELS: tuple[str, ...] = ("anger", "sadness", "happiness", "surprise", "fear", "distress")
LABEL_SET = frozenset(LABELS)

MODEL_FORMAT_VERSION = 1


class CorpusError(ValueError):
    """Raised for unreadable or malformed corpus files."""


class ClassifierError(ValueError):
    """Raised when a precondition of split/train/load is violated."""


@dataclass(frozen=True)
class LabeledCorpus:
    """Immutable list of (text, label) records."""

    records: tuple[tuple[str, str], ...]

    def __len__(self) -> int:
        return len(self.records)

    def label_counts(self) -> dict[str, int]:
        counts = {label: 0 for label in LABELS}
        for _, label in self.records:
            counts[label] += 1
        return counts


@dataclass(frozen=True)
class TrainingConfig:
    split_ratio: tuple[int, int] = (8, 1)
    smoothing: float = 1.0

    def __post_init__(self) -> None:
        train_part, validation_part = self.split_ratio
        if train_part < 1 or validation_part < 1:
            raise ValueError("split_ratio parts must be positive")
        if self.smoothing <= 0.0:
            raise ValueError("smoothing must be positive")


@dataclass(frozen=True)
class EmotionModel:
    """Priors, vocabulary and per-label log-likelihood tables."""

    class_priors: dict[str, float]
    feature_log_likelihoods: dict[str, dict[str, float]]
    vocabulary: frozenset[str]
    smoothing: float


@dataclass(frozen=True)
class EmotionPrediction:
    label: str
    confidence: float
    distribution: dict[str, float]


@dataclass(frozen=True)
class EvaluationReport:
    """Accuracy plus a confusion matrix keyed ``[true_label][predicted_label]``."""

    accuracy: float
    confusion: dict[str, dict[str, int]]


def make_corpus(records: list[tuple[str, str]]) -> LabeledCorpus:
    """Validate and freeze (text, label) records."""
    for index, (text, label) in enumerate(records):
        if label not in LABEL_SET:
            raise CorpusError(f"record {index}: unknown label {label!r}")
        if not text.strip():
            raise CorpusError(f"record {index}: empty text")
    return LabeledCorpus(records=tuple(records))


def load_corpus(path: str | Path) -> LabeledCorpus:
    """Read ``label<TAB>text`` lines; blank lines are skipped."""
    records: list[tuple[str, str]] = []
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        if not line.strip():
            continue
        label, sep, text = line.partition("\t")
        if not sep:
            raise CorpusError(f"{path}:{lineno}: expected 'label<TAB>text'")
        if label not in LABEL_SET:
            raise CorpusError(f"{path}:{lineno}: unknown label {label!r}")
        if not text.strip():
            raise CorpusError(f"{path}:{lineno}: empty text")
        records.append((text, label))
    return LabeledCorpus(records=tuple(records))


def save_corpus(corpus: LabeledCorpus, path: str | Path) -> None:
    lines = [f"{label}\t{text}" for text, label in corpus.records]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def split(
    corpus: LabeledCorpus,
    config: TrainingConfig = TrainingConfig(),
    seed: int = 0,
) -> tuple[LabeledCorpus, LabeledCorpus]:
    """Seed-deterministic shuffle, then cut at ``round(n * train / (train + validation))``."""
    train_part, validation_part = config.split_ratio
    minimum = train_part + validation_part
    if len(corpus) < minimum:
        raise ClassifierError(
            f"corpus has {len(corpus)} records; a {train_part}:{validation_part} "
            f"split needs at least {minimum}"
        )
    records = list(corpus.records)
    random.Random(seed).shuffle(records)
    cut = round(len(records) * train_part / minimum)
    return LabeledCorpus(tuple(records[:cut])), LabeledCorpus(tuple(records[cut:]))


def _features(text: str, profile: LanguageProfile) -> list[str]:
    tokens = lemmatize(drop_stopwords(tokenize(text, profile), profile), profile)
    return [tok.term for tok in tokens]


def train(
    corpus: LabeledCorpus,
    profile: LanguageProfile,
    config: TrainingConfig = TrainingConfig(),
) -> EmotionModel:
    """Fit priors and smoothed per-label term likelihoods.

    Counts are order-independent, so any permutation of the same records
    trains the identical model. Every label must occur at least once.
    """
    counts = corpus.label_counts()
    missing = [label for label in LABELS if counts[label] == 0]
    if missing:
        raise ClassifierError(f"corpus lacks examples for: {', '.join(missing)}")
    term_counts: dict[str, dict[str, int]] = {label: {} for label in LABELS}
    totals = {label: 0 for label in LABELS}
    vocabulary: set[str] = set()
    for text, label in corpus.records:
        for term in _features(text, profile):
            vocabulary.add(term)
            term_counts[label][term] = term_counts[label].get(term, 0) + 1
            totals[label] += 1
    n = len(corpus)
    priors = {label: counts[label] / n for label in LABELS}
    vocab_size = len(vocabulary)
    s = config.smoothing
    log_likelihoods: dict[str, dict[str, float]] = {}
    for label in LABELS:
        denominator = totals[label] + s * vocab_size
        log_likelihoods[label] = {
            term: math.log((term_counts[label].get(term, 0) + s) / denominator)
            for term in sorted(vocabulary)
        }
    return EmotionModel(
        class_priors=priors,
        feature_log_likelihoods=log_likelihoods,
        vocabulary=frozenset(vocabulary),
        smoothing=s,
    )


def predict(model: EmotionModel, text: str, profile: LanguageProfile) -> EmotionPrediction:
    """Posterior over all six labels; ties break in the fixed label order.

    Empty input (or input made of unknown terms only) falls back to the
    class priors.
    """
    terms = [t for t in _features(text, profile) if t in model.vocabulary]
    log_posterior: dict[str, float] = {}
    for label in LABELS:
        score = math.log(model.class_priors[label])
        table = model.feature_log_likelihoods[label]
        for term in terms:
            score += table[term]
        log_posterior[label] = score
    peak = max(log_posterior.values())
    total = peak + math.log(sum(math.exp(v - peak) for v in log_posterior.values()))
    distribution = {label: math.exp(log_posterior[label] - total) for label in LABELS}
    best = LABELS[0]
    for label in LABELS[1:]:
        if distribution[label] > distribution[best]:
            best = label
    return EmotionPrediction(label=best, confidence=distribution[best], distribution=distribution)


def evaluate(model: EmotionModel, corpus: LabeledCorpus, profile: LanguageProfile) -> EvaluationReport:
    """Accuracy and 6x6 confusion counts of ``model`` on ``corpus``."""
    confusion = {true: {pred: 0 for pred in LABELS} for true in LABELS}
    hits = 0
    for text, label in corpus.records:
        predicted = predict(model, text, profile).label
        confusion[label][predicted] += 1
        hits += predicted == label
    accuracy = hits / len(corpus) if len(corpus) else 0.0
    return EvaluationReport(accuracy=accuracy, confusion=confusion)


def format_confusion(report: EvaluationReport) -> str:
    """Fixed-width text table of the confusion matrix, rows = true labels."""
    width = max(len(label) for label in LABELS) + 2
    header = " " * width + "".join(label.rjust(width) for label in LABELS)
    rows = [header]
    for true in LABELS:
        cells = "".join(str(report.confusion[true][pred]).rjust(width) for pred in LABELS)
        rows.append(true.rjust(width) + cells)
    return "\n".join(rows)


def save_model(model: EmotionModel, path: str | Path) -> None:
    payload = {
        "format_version": MODEL_FORMAT_VERSION,
        "smoothing": model.smoothing,
        "class_priors": model.class_priors,
        "feature_log_likelihoods": model.feature_log_likelihoods,
        "vocabulary": sorted(model.vocabulary),
    }
    Path(path).write_text(json.dumps(payload, indent=2, sort_keys=True), encoding="utf-8")


def load_model(path: str | Path) -> EmotionModel:
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ClassifierError(f"model {path}: invalid JSON ({exc})") from exc
    if payload.get("format_version") != MODEL_FORMAT_VERSION:
        raise ClassifierError(f"model {path}: unsupported format_version")
    try:
        priors = {label: float(payload["class_priors"][label]) for label in LABELS}
        tables = {
            label: {term: float(v) for term, v in payload["feature_log_likelihoods"][label].items()}
            for label in LABELS
        }
        vocabulary = frozenset(payload["vocabulary"])
        smoothing = float(payload["smoothing"])
    except (KeyError, TypeError) as exc:
        raise ClassifierError(f"model {path}: missing or malformed field ({exc})") from exc
    return EmotionModel(
        class_priors=priors,
        feature_log_likelihoods=tables,
        vocabulary=vocabulary,
        smoothing=smoothing,
    )
