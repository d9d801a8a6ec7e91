"""Deterministic template backend for tests and offline runs."""

from __future__ import annotations

from ..core.knowledge import KnowledgeGraph
from .base import DecodeConfig, KnowledgeModel


class StubModel(KnowledgeModel):
    """Fills every tail with ``to <stub:{relation}:{head}>``.

    Pure and idempotent: regenerating overwrites tails identically.
    """

    def generate(self, partial: KnowledgeGraph,
                 decode: DecodeConfig | None = None) -> KnowledgeGraph:
        return KnowledgeGraph(
            t.with_tails([f"to <stub:{t.relation}:{t.head.text}>"]) for t in partial
        )
