"""Contextual relevance scoring and graph filtering.

The built-in scorer verbalizes each fact through its relation and
compares mean-pooled word embeddings of the context and the fact by
cosine, mapped to [0, 1] via (cos + 1) / 2. A pluggable external scorer
posts ``{context, head, relation, tail}`` to a classifier endpoint that
answers ``{"relevance": p}``.

Filtering is fail-open by default: a tuple whose scorer call fails is
kept and flagged rather than dropped.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Protocol

import requests

from ..core.knowledge import KnowledgeGraph, KnowledgeTuple
from ..core.relations import RelationRegistry, default_registry
from ..errors import ApiError, TransportError, UsageError, ValidationError
from ..matching.embeddings import EmbeddingTable

logger = logging.getLogger(__name__)

UNINFORMATIVE_SCORE = 0.5


@dataclass
class RelevanceJudgment:
    tuple: KnowledgeTuple
    score: float | None
    keep: bool
    flagged: bool = False
    note: str = ""


class RelevanceScorer(Protocol):
    def score(self, context: str, k: KnowledgeTuple) -> tuple[float, bool]:
        """Return (score in [0, 1], flagged)."""
        ...


def _check_inputs(context: str, k: KnowledgeTuple) -> None:
    if not context.strip():
        raise ValidationError("context must be non-empty")
    if not k.tails:
        raise ValidationError("tuple has no tails to judge")


class EmbeddingCosineScorer:
    """Cosine of pooled embeddings between context and verbalized fact."""

    def __init__(self, table: EmbeddingTable, registry: RelationRegistry | None = None):
        self.table = table
        self.registry = registry or default_registry()

    def score(self, context: str, k: KnowledgeTuple) -> tuple[float, bool]:
        _check_inputs(context, k)
        fact_text = self.registry.verbalize_name(k.relation, k.head.text, tail=k.tails[0])
        a = self.table.pool(context)
        b = self.table.pool(fact_text)
        na = float((a @ a) ** 0.5)
        nb = float((b @ b) ** 0.5)
        if na == 0.0 or nb == 0.0:
            return UNINFORMATIVE_SCORE, True  # no token in vocabulary
        cos = float(a @ b) / (na * nb)
        return min(1.0, max(0.0, (cos + 1.0) / 2.0)), False


class ExternalScorer:
    """Delegates scoring to a fact-linking classifier endpoint."""

    def __init__(self, url: str, timeout: float = 30.0,
                 session: requests.Session | None = None):
        self.url = url
        self.timeout = timeout
        self.session = session or requests.Session()

    def score(self, context: str, k: KnowledgeTuple) -> tuple[float, bool]:
        _check_inputs(context, k)
        body = {
            "context": context,
            "head": k.head.text,
            "relation": k.relation,
            "tail": k.tails[0],
        }
        try:
            response = self.session.post(self.url, json=body, timeout=self.timeout)
        except requests.RequestException as e:
            raise TransportError(f"relevance endpoint unreachable: {e}") from e
        if response.status_code != 200:
            raise ApiError("relevance endpoint error", status=response.status_code,
                           body=response.text)
        try:
            value = float(response.json()["relevance"])
        except (ValueError, KeyError, TypeError) as e:
            raise ApiError(f"malformed relevance response: {e}",
                           status=response.status_code, body=response.text) from e
        return min(1.0, max(0.0, value)), False


def relevance_score(context: str, k: KnowledgeTuple, scorer: RelevanceScorer) -> float:
    """Relevance of one tuple to its originating context, in [0, 1]."""
    score, _ = scorer.score(context, k)
    return score


def filter_graph(g: KnowledgeGraph, context: str, threshold: float,
                 scorer: RelevanceScorer,
                 fail_open: bool = True) -> tuple[KnowledgeGraph, list[RelevanceJudgment]]:
    """Keep tuples scoring at or above ``threshold``, preserving order.

    Judgments cover every input tuple. Scorer failures keep the tuple
    flagged when ``fail_open`` (the default), or drop it otherwise.
    """
    if not 0.0 <= threshold <= 1.0:
        raise UsageError("threshold must be within [0, 1]")
    kept = KnowledgeGraph()
    judgments: list[RelevanceJudgment] = []
    for t in g:
        try:
            score, flagged = scorer.score(context, t)
        except (TransportError, ValidationError) as e:
            logger.warning("scoring failed for (%s, %s): %s", t.head.text, t.relation, e)
            judgments.append(RelevanceJudgment(t, None, keep=fail_open,
                                               flagged=True, note=str(e)))
            if fail_open:
                kept.append(t)
            continue
        keep = score >= threshold
        judgments.append(RelevanceJudgment(t, score, keep=keep, flagged=flagged))
        if keep:
            kept.append(t)
    return kept, judgments
