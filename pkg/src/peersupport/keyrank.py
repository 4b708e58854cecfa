"""Graph-based keyword extraction over a term co-occurrence graph.

Terms become nodes; two terms are linked when they appear within ``window``
positions of each other, with the co-occurrence count as edge weight. Node
importance follows the damped recurrence

    S(v) = (1 - d) + d * sum_{u in N(v)} w(u, v) * S(u) / deg(u)

iterated synchronously from 1.0 per node until the largest per-node change
drops below ``tolerance``. The top three nodes by score become the suggested
keywords; when the graph yields too few candidates, a plain frequency count
over lemmatized terms takes over.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .textproc import LanguageProfile, Token, drop_stopwords, lemmatize, tokenize

MAX_KEYWORDS = 3


@dataclass(frozen=True)
class RankConfig:
    """Tunable parameters for graph construction and score iteration."""

    window: int = 2
    damping: float = 0.85
    tolerance: float = 1e-6
    max_iterations: int = 100
    min_keyword_count: int = 1

    def __post_init__(self) -> None:
        if self.window < 1:
            raise ValueError("window must be >= 1")
        if not 0.0 < self.damping < 1.0:
            raise ValueError("damping must lie strictly between 0 and 1")
        if self.tolerance <= 0.0:
            raise ValueError("tolerance must be positive")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")
        if self.min_keyword_count < 0:
            raise ValueError("min_keyword_count must be >= 0")


@dataclass(frozen=True)
class CooccurrenceGraph:
    """Undirected weighted graph: nodes in first-seen order, edges keyed by sorted pair."""

    nodes: tuple[str, ...]
    edges: dict[tuple[str, str], int]
    degrees: dict[str, int] = field(default_factory=dict)

    def adjacency(self) -> dict[str, dict[str, int]]:
        """Neighbor map derived from the edge dict."""
        adj: dict[str, dict[str, int]] = {node: {} for node in self.nodes}
        for (a, b), weight in self.edges.items():
            adj[a][b] = weight
            adj[b][a] = weight
        return adj


@dataclass(frozen=True)
class RankResult:
    """Scores plus convergence status of the iteration."""

    scores: dict[str, float]
    converged: bool
    iterations: int


@dataclass(frozen=True)
class KeywordCandidate:
    term: str
    score: float


def build_graph(tokens: list[Token], window: int) -> CooccurrenceGraph:
    """Count co-occurrences of distinct terms whose positions differ by less than ``window``.

    ``tokens`` should already be stopword-free; positions are taken from the
    tokens themselves, so gaps left by removed stopwords still count as
    distance. Self-pairs never produce an edge.
    """
    if window < 1:
        raise ValueError("window must be >= 1")
    nodes: dict[str, None] = {}
    weights: Counter[tuple[str, str]] = Counter()
    for tok in tokens:
        nodes.setdefault(tok.term, None)
    for i, left in enumerate(tokens):
        for right in tokens[i + 1 :]:
            if right.position - left.position >= window:
                break
            if left.term != right.term:
                weights[tuple(sorted((left.term, right.term)))] += 1
    edges = dict(weights)
    degrees = {node: 0 for node in nodes}
    for (a, b), weight in edges.items():
        degrees[a] += weight
        degrees[b] += weight
    return CooccurrenceGraph(nodes=tuple(nodes), edges=edges, degrees=degrees)


def rank(graph: CooccurrenceGraph, config: RankConfig = RankConfig()) -> RankResult:
    """Iterate the damped score recurrence to a fixed point.

    Every node starts at 1.0; isolated nodes settle at ``1 - damping``
    immediately. Returns the last iterate with ``converged=False`` when
    ``max_iterations`` sweeps were not enough.
    """
    if not graph.nodes:
        return RankResult(scores={}, converged=True, iterations=0)
    d = config.damping
    adj = graph.adjacency()
    degrees = graph.degrees
    scores = {node: 1.0 for node in graph.nodes}
    for sweep in range(1, config.max_iterations + 1):
        updated: dict[str, float] = {}
        for node in graph.nodes:
            total = 0.0
            for neighbor, weight in adj[node].items():
                total += weight * scores[neighbor] / degrees[neighbor]
            updated[node] = (1.0 - d) + d * total
        delta = max(abs(updated[node] - scores[node]) for node in graph.nodes)
        scores = updated
        if delta < config.tolerance:
            return RankResult(scores=scores, converged=True, iterations=sweep)
    return RankResult(scores=scores, converged=False, iterations=config.max_iterations)


def extract_keywords(
    text: str,
    profile: LanguageProfile,
    config: RankConfig = RankConfig(),
) -> list[KeywordCandidate]:
    """Suggest up to three keywords for ``text``, best first.

    Primary path: tokenize, drop stopwords, rank the co-occurrence graph.
    When that yields fewer than ``config.min_keyword_count`` candidates the
    fallback kicks in: lemmatize the tokens, drop stopwords, rank by raw
    frequency. Either way ties break lexicographically and stopwords never
    appear in the result.
    """
    tokens = tokenize(text, profile)
    content = drop_stopwords(tokens, profile)
    result = rank(build_graph(content, config.window), config)
    candidates = [KeywordCandidate(term, score) for term, score in result.scores.items()]
    if len(candidates) < config.min_keyword_count:
        lemmas = drop_stopwords(lemmatize(tokens, profile), profile)
        counts = Counter(tok.term for tok in lemmas)
        candidates = [KeywordCandidate(term, float(n)) for term, n in counts.items()]
    candidates.sort(key=lambda c: (-c.score, c.term))
    return candidates[:MAX_KEYWORDS]
