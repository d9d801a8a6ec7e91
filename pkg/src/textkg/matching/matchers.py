"""Head-to-relation matching: base, heuristic, and model-based.

Output pairs follow head order, then registry order, with no duplicate
(head, relation) pairs. The base matcher pairs every registered relation;
the heuristic matcher maps noun phrases to the physical group and
sentences / verb phrases to social plus event; the model matcher expands
the groups whose predicted probability clears the threshold (falling back
to the heuristic when no group does).
"""

from __future__ import annotations

from typing import Iterable, Sequence

from ..core.knowledge import KnowledgeGraph, KnowledgeHead, KnowledgeTuple
from ..core.relations import EVENT, PHYSICAL, SOCIAL, RelationRegistry
from ..errors import ConfigurationError, UsageError
from ..extraction.heads import NOUN_PHRASE, classify_head_form
from .swem import MatcherModel

MATCHER_NAMES = ("base", "heuristic", "model")


def _restrict(names: Iterable[str], subset: set[str] | None) -> list[str]:
    return [n for n in names if subset is None or n in subset]


def _groups_for_head(head: KnowledgeHead) -> tuple[str, ...]:
    if classify_head_form(head) == NOUN_PHRASE:
        return (PHYSICAL,)
    return (SOCIAL, EVENT)


def match_relations(heads: Sequence[KnowledgeHead | str], matcher: str,
                    registry: RelationRegistry,
                    subset: Iterable[str] | None = None,
                    model: MatcherModel | None = None) -> list[tuple[KnowledgeHead, str]]:
    """Pair each head with plausible relation names."""
    if matcher not in MATCHER_NAMES:
        raise UsageError(f"unknown matcher {matcher!r}; expected one of {MATCHER_NAMES}")
    if len(registry) == 0:
        raise UsageError("relation registry is empty")
    subset_set: set[str] | None = None
    if subset is not None:
        subset_set = set(subset)
        unknown = subset_set - set(registry.names)
        if unknown:
            raise UsageError(f"relations not in registry: {sorted(unknown)}")
    if matcher == "model" and model is None:
        raise ConfigurationError("model matcher selected but no matcher model loaded")

    pairs: list[tuple[KnowledgeHead, str]] = []
    seen: set[tuple[str, str]] = set()
    for head in heads:
        if isinstance(head, str):
            head = KnowledgeHead(head)
        if matcher == "base":
            names = registry.names
        else:
            if matcher == "model":
                groups = model.predict_groups(head.text)
                if not groups:
                    groups = _groups_for_head(head)  # empty-prediction fallback
            else:
                groups = _groups_for_head(head)
            wanted = set(groups)
            names = [r.name for r in registry if r.group in wanted]
        for name in _restrict(names, subset_set):
            key = (head.text, name)
            if key not in seen:
                seen.add(key)
                pairs.append((head, name))
    return pairs


def pairs_to_graph(pairs: Iterable[tuple[KnowledgeHead, str]]) -> KnowledgeGraph:
    """Build the partial (tails empty) graph from matched pairs."""
    return KnowledgeGraph(KnowledgeTuple(head, relation) for head, relation in pairs)
