import numpy as np
import pytest

from textkg.errors import ConfigurationError, ValidationError
from textkg.matching.dataset import LabeledHead, MatcherDataset
from textkg.matching.embeddings import EmbeddingTable
from textkg.matching.evaluate import evaluate_matcher
from textkg.matching.swem import MatcherModel, TrainConfig, train_swem_matcher

from synthdata import separable_matcher_corpus


def small_table():
    return EmbeddingTable.from_mapping({
        "alpha": [1.0, 0.0],
        "beta": [0.0, 1.0],
        "gamma": [1.0, 1.0],
    })


def test_all_unknown_head_pools_to_zero_and_predicts_sigmoid_bias():
    bias = np.array([0.3, -0.2, 1.5])
    model = MatcherModel(embeddings=small_table(), weights=np.ones((3, 2)), bias=bias)
    probs = model.predict_proba("totally unknown words")
    # zero-vector pooling forces logits == bias exactly: weights are inert
    other = MatcherModel(embeddings=small_table(), weights=np.full((3, 2), 9e9), bias=bias)
    assert probs == other.predict_proba("different unknown tokens")
    assert probs == pytest.approx(tuple(1.0 / (1.0 + np.exp(-bias))), rel=1e-12)


def test_unknown_words_excluded_from_pooling_denominator():
    table = small_table()
    assert np.allclose(table.pool("alpha unknownword"), [1.0, 0.0])
    assert np.allclose(table.pool("alpha beta"), [0.5, 0.5])
    assert np.allclose(table.pool("nothing known"), [0.0, 0.0])


def test_prediction_invariant_to_token_order():
    model = MatcherModel(embeddings=small_table(),
                         weights=np.array([[0.5, -1.0], [2.0, 0.1], [0.0, 0.3]]),
                         bias=np.zeros(3))
    assert model.predict_proba("alpha beta gamma") == model.predict_proba("gamma alpha beta")


def test_probabilities_within_unit_interval():
    model = MatcherModel(embeddings=small_table(),
                         weights=np.full((3, 2), 50.0), bias=np.array([0.0, -100.0, 100.0]))
    for head in ("alpha", "beta gamma", "unknown"):
        assert all(0.0 <= p <= 1.0 for p in model.predict_proba(head))


def test_training_is_seed_deterministic():
    train, _, table = separable_matcher_corpus(n_per_group=60, vocab_per_group=25, dim=32)
    config = TrainConfig(epochs=5, seed=42)
    a = train_swem_matcher(train, table, config)
    b = train_swem_matcher(train, table, config)
    assert np.array_equal(a.weights, b.weights)
    assert np.array_equal(a.bias, b.bias)
    assert a.history == b.history


def test_different_seeds_differ():
    train, _, table = separable_matcher_corpus(n_per_group=30, vocab_per_group=15, dim=16)
    a = train_swem_matcher(train, table, TrainConfig(epochs=2, seed=1))
    b = train_swem_matcher(train, table, TrainConfig(epochs=2, seed=2))
    assert not np.array_equal(a.weights, b.weights)


def test_loss_decreases_on_separable_data():
    train, _, table = separable_matcher_corpus()
    model = train_swem_matcher(train, table, TrainConfig(seed=11))
    assert model.history[-1] < model.history[0]


def test_synthetic_macro_f1_target():
    train, test, table = separable_matcher_corpus()
    model = train_swem_matcher(train, table, TrainConfig(epochs=20, batch_size=64, seed=11))
    result = evaluate_matcher(model, test)
    assert result.macro_f1 >= 0.95


def test_empty_dataset_rejected():
    with pytest.raises(ValidationError):
        train_swem_matcher(MatcherDataset(), small_table(), TrainConfig())


def test_bad_config_rejected():
    ds = MatcherDataset([LabeledHead("alpha", frozenset({"physical"}))])
    with pytest.raises(ValidationError):
        train_swem_matcher(ds, small_table(), TrainConfig(epochs=0))


def test_save_load_round_trip(tmp_path):
    train, test, table = separable_matcher_corpus(n_per_group=40, vocab_per_group=20, dim=16)
    model = train_swem_matcher(train, table, TrainConfig(epochs=3, seed=5))
    path = tmp_path / "model.json"
    model.save(path)
    loaded = MatcherModel.load(path, table)
    assert np.array_equal(loaded.weights, model.weights)
    assert np.array_equal(loaded.bias, model.bias)
    for ex in list(test)[:10]:
        assert loaded.predict_proba(ex.head) == model.predict_proba(ex.head)


def test_load_rejects_mismatched_vocabulary(tmp_path):
    train, _, table = separable_matcher_corpus(n_per_group=10, vocab_per_group=10, dim=8)
    model = train_swem_matcher(train, table, TrainConfig(epochs=1, seed=5))
    path = tmp_path / "model.json"
    model.save(path)
    with pytest.raises(ConfigurationError):
        MatcherModel.load(path, small_table())


def test_projection_shape_validated():
    with pytest.raises(ValidationError):
        MatcherModel(embeddings=small_table(), weights=np.zeros((2, 2)), bias=np.zeros(3))
    with pytest.raises(ValidationError):
        MatcherModel(embeddings=small_table(), weights=np.zeros((3, 2)), bias=np.zeros(2))


def test_dataset_label_vector_order():
    ex = LabeledHead("h", frozenset({"event", "physical"}))
    assert ex.label_vector() == [1.0, 0.0, 1.0]


def test_dataset_rejects_duplicates_and_empty_labels():
    ds = MatcherDataset([LabeledHead("h", frozenset({"social"}))])
    with pytest.raises(ValidationError):
        ds.add(LabeledHead("h", frozenset({"event"})))
    with pytest.raises(ValidationError):
        LabeledHead("x", frozenset())
    with pytest.raises(ValidationError):
        LabeledHead("x", frozenset({"slapstick"}))


def test_dataset_jsonl_round_trip(tmp_path):
    ds = MatcherDataset([
        LabeledHead("PersonX acts funny", frozenset({"event", "social"})),
        LabeledHead("accordion", frozenset({"physical"})),
    ])
    path = tmp_path / "ds.jsonl"
    ds.to_jsonl(path)
    again = MatcherDataset.from_jsonl(path)
    assert [(e.head, e.labels) for e in again] == [(e.head, e.labels) for e in ds]


def test_embedding_table_text_round_trip(tmp_path):
    table = small_table()
    path = tmp_path / "emb.txt"
    table.save(path)
    again = EmbeddingTable.load(path)
    assert again.vocab == table.vocab
    assert np.array_equal(again.matrix, table.matrix)
    assert again.vocab_hash() == table.vocab_hash()
