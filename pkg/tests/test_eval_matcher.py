import pytest

from textkg.core.relations import GROUPS
from textkg.errors import UsageError
from textkg.matching.dataset import LabeledHead, MatcherDataset
from textkg.matching.evaluate import (
    base_group_predictor,
    evaluate_matcher,
    heuristic_group_predictor,
)


def single_label_dataset():
    # two examples per group, six total
    pairs = [
        ("apple orchard", "physical"), ("stone bridge", "physical"),
        ("friendship bond", "social"), ("kindness gesture", "social"),
        ("wedding ceremony", "event"), ("festival parade", "event"),
    ]
    return MatcherDataset(LabeledHead(h, frozenset({g})) for h, g in pairs)


def test_perfect_predictor_scores_one():
    ds = single_label_dataset()
    truth = {ex.head: ex.labels for ex in ds}
    result = evaluate_matcher(lambda head: truth[head], ds)
    assert result.macro_f1 == 1.0
    assert result.micro_f1 == 1.0
    assert all(v == 1.0 for v in result.per_group_f1.values())


def test_always_all_groups_micro_f1_hand_tabulated():
    # oracle: per example TP=1, FP=2, FN=0 over 6 single-label examples:
    # micro precision 6/18, recall 6/6, F1 = 2*(1/3)/(4/3) = 0.5;
    # per group TP=2, FP=4, FN=0 so F1 = 4/8 = 0.5 and macro = 0.5
    result = evaluate_matcher(base_group_predictor, single_label_dataset())
    assert result.micro_f1 == pytest.approx(0.5)
    assert result.macro_f1 == pytest.approx(0.5)
    assert all(v == pytest.approx(0.5) for v in result.per_group_f1.values())


def test_base_matcher_name_equals_base_predictor():
    ds = single_label_dataset()
    assert evaluate_matcher("base", ds).to_dict() == \
           evaluate_matcher(base_group_predictor, ds).to_dict()


def test_heuristic_predictor_on_known_forms():
    assert heuristic_group_predictor("hammer") == {"physical"}
    assert heuristic_group_predictor("PersonX acts funny") == {"social", "event"}
    assert heuristic_group_predictor("become player") == {"social", "event"}


def test_heuristic_matcher_scoring_hand_counts():
    # dataset: one noun phrase labeled physical (full credit), one sentence
    # labeled social+event (full credit), one noun phrase labeled event
    # (zero credit): hand confusion counts per group:
    #   physical: TP=1 FP=1 FN=0 -> F1 = 2/3
    #   social:   TP=1 FP=0 FN=0 -> F1 = 1
    #   event:    TP=1 FP=0 FN=1 -> F1 = 2/3
    ds = MatcherDataset([
        LabeledHead("hammer", frozenset({"physical"})),
        LabeledHead("PersonX acts funny", frozenset({"social", "event"})),
        LabeledHead("big investment", frozenset({"event"})),
    ])
    result = evaluate_matcher("heuristic", ds)
    assert result.per_group_f1["physical"] == pytest.approx(2 / 3)
    assert result.per_group_f1["social"] == pytest.approx(1.0)
    assert result.per_group_f1["event"] == pytest.approx(2 / 3)
    assert result.macro_f1 == pytest.approx((2 / 3 + 1.0 + 2 / 3) / 3)
    # micro: TP=3 FP=1 FN=1 -> 6/8
    assert result.micro_f1 == pytest.approx(0.75)


def test_unknown_matcher_and_empty_dataset():
    with pytest.raises(UsageError):
        evaluate_matcher("bogus", single_label_dataset())
    with pytest.raises(UsageError):
        evaluate_matcher("base", MatcherDataset())


def test_result_serialization_shape():
    d = evaluate_matcher("base", single_label_dataset()).to_dict()
    assert set(d) == {"per_group_f1", "macro_f1", "micro_f1", "n_examples"}
    assert set(d["per_group_f1"]) == set(GROUPS)
