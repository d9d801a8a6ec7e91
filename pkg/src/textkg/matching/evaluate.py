"""Multi-label F1 evaluation of relation matchers at threshold 0.5.

Works for the trained matcher and for the rule-based ones: anything that
maps a head text to a set of predicted groups can be scored.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..core.relations import GROUPS
from ..errors import UsageError
from ..extraction.heads import NOUN_PHRASE, classify_head_form
from .dataset import MatcherDataset
from .swem import MatcherModel

GroupPredictor = Callable[[str], frozenset[str]]


def base_group_predictor(head: str) -> frozenset[str]:
    """The all-relations matcher predicts every group."""
    return frozenset(GROUPS)


def heuristic_group_predictor(head: str) -> frozenset[str]:
    """Noun phrases map to physical; sentences and verb phrases map to
    social plus event."""
    if classify_head_form(head) == NOUN_PHRASE:
        return frozenset({"physical"})
    return frozenset({"social", "event"})


def resolve_group_predictor(matcher, model: MatcherModel | None = None) -> GroupPredictor:
    """Accepts 'base' / 'heuristic' / 'model', a MatcherModel, or any
    callable head -> group set."""
    if isinstance(matcher, MatcherModel):
        return matcher.predict_groups
    if callable(matcher):
        return matcher
    if matcher == "base":
        return base_group_predictor
    if matcher == "heuristic":
        return heuristic_group_predictor
    if matcher == "model":
        if model is None:
            raise UsageError("model matcher selected but no matcher model loaded")
        return model.predict_groups
    raise UsageError(f"unknown matcher {matcher!r}")


@dataclass
class MatcherEvalResult:
    per_group_f1: dict[str, float]
    macro_f1: float
    micro_f1: float
    n_examples: int

    def to_dict(self) -> dict:
        return {
            "per_group_f1": dict(self.per_group_f1),
            "macro_f1": self.macro_f1,
            "micro_f1": self.micro_f1,
            "n_examples": self.n_examples,
        }


def _f1(tp: int, fp: int, fn: int) -> float:
    denom = 2 * tp + fp + fn
    return 2 * tp / denom if denom else 0.0


def evaluate_matcher(matcher, dataset: MatcherDataset,
                     model: MatcherModel | None = None) -> MatcherEvalResult:
    """Per-group, macro, and micro F1 of ``matcher`` on a labeled dataset."""
    if len(dataset) == 0:
        raise UsageError("evaluation dataset is empty")
    predict = resolve_group_predictor(matcher, model)
    tp = {g: 0 for g in GROUPS}
    fp = {g: 0 for g in GROUPS}
    fn = {g: 0 for g in GROUPS}
    for ex in dataset:
        predicted = predict(ex.head)
        for g in GROUPS:
            if g in predicted and g in ex.labels:
                tp[g] += 1
            elif g in predicted:
                fp[g] += 1
            elif g in ex.labels:
                fn[g] += 1
    per_group = {g: _f1(tp[g], fp[g], fn[g]) for g in GROUPS}
    macro = sum(per_group.values()) / len(GROUPS)
    micro = _f1(sum(tp.values()), sum(fp.values()), sum(fn.values()))
    return MatcherEvalResult(per_group_f1=per_group, macro_f1=macro,
                             micro_f1=micro, n_examples=len(dataset))
