import json
from pathlib import Path

from textkg.cli import main
from textkg.core.knowledge import KnowledgeGraph, KnowledgeTuple
from textkg.matching.dataset import MatcherDataset

from synthdata import resplit_pool, separable_matcher_corpus

GOLDEN = Path(__file__).parent / "data" / "golden_infer.jsonl"
TEXT = "PersonX becomes a great basketball player"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_heads_command_outputs_json(capsys):
    code, out, _ = run(capsys, "heads", "--text", TEXT)
    assert code == 0
    items = json.loads(out)
    assert {"head": "basketball player", "form": "noun_phrase"} in items
    assert items[0]["form"] == "sentence"


def test_heads_accepts_extractor_aliases(capsys):
    code, out, _ = run(capsys, "heads", "--text", TEXT, "--extractors", "np,vp")
    assert code == 0
    assert all(item["form"] in ("noun_phrase", "verb_phrase") for item in json.loads(out))


def test_infer_dry_run_matches_golden(capsys):
    code, out, _ = run(capsys, "infer", "--text", TEXT, "--dry-run")
    assert code == 0
    assert out.encode() == GOLDEN.read_bytes()


def test_infer_stub_with_explicit_heads(capsys):
    code, out, _ = run(capsys, "infer", "--heads", "X goes running",
                       "--matcher", "base", "--relations", "xNeed")
    assert code == 0
    record = json.loads(out.strip())
    assert record == {"head": "X goes running", "relation": "xNeed",
                      "tails": ["to <stub:xNeed:X goes running>"]}


def test_infer_writes_output_file(tmp_path, capsys):
    out_path = tmp_path / "graph.jsonl"
    code, out, _ = run(capsys, "infer", "--text", TEXT, "--dry-run",
                       "--output", str(out_path))
    assert code == 0 and out == ""
    assert out_path.read_bytes() == GOLDEN.read_bytes()


def test_infer_config_file_with_cli_precedence(tmp_path, capsys):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"dry_run": True, "relations": ["xIntent"]}))
    code, out, _ = run(capsys, "infer", "--text", TEXT, "--config", str(config))
    assert code == 0
    assert {json.loads(l)["relation"] for l in out.splitlines()} == {"xIntent"}
    # CLI flag overrides the file
    code, out, _ = run(capsys, "infer", "--text", TEXT, "--config", str(config),
                       "--relations", "xNeed")
    assert {json.loads(l)["relation"] for l in out.splitlines()} == {"xNeed"}


def test_infer_missing_text_is_usage_error(capsys):
    code, _, err = run(capsys, "infer", "--dry-run")
    assert code == 2
    assert "error" in err


def test_json_errors_flag_emits_machine_readable(capsys):
    code, _, err = run(capsys, "infer", "--dry-run", "--json-errors")
    assert code == 2
    payload = json.loads(err)
    assert payload["exit_code"] == 2
    assert payload["error"]


def test_match_command(tmp_path, capsys):
    heads_file = tmp_path / "heads.json"
    heads_file.write_text(json.dumps(["hammer", {"head": "PersonX acts funny"}]))
    code, out, _ = run(capsys, "match", "--heads-file", str(heads_file),
                       "--matcher", "heuristic")
    assert code == 0
    pairs = [(json.loads(l)["head"], json.loads(l)["relation"]) for l in out.splitlines()]
    assert ("hammer", "AtLocation") in pairs
    assert ("PersonX acts funny", "xIntent") in pairs
    assert all(not json.loads(l)["tails"] for l in out.splitlines())


def test_train_and_match_with_model(tmp_path, capsys):
    train, _, table = separable_matcher_corpus(n_per_group=40, vocab_per_group=20, dim=16)
    train_path = tmp_path / "train.jsonl"
    train.to_jsonl(train_path)
    emb_path = tmp_path / "emb.txt"
    table.save(emb_path)
    model_path = tmp_path / "model.json"

    code, out, _ = run(capsys, "train-matcher", "--train", str(train_path),
                       "--embeddings", str(emb_path), "--epochs", "5",
                       "--batch-size", "64", "--lr", "0.01", "--seed", "3",
                       "--out", str(model_path))
    assert code == 0
    summary = json.loads(out)
    assert summary["examples"] == len(train)
    assert model_path.exists()

    heads_file = tmp_path / "heads.json"
    heads_file.write_text(json.dumps(["physicalw0 physicalw1"]))
    code, out, _ = run(capsys, "match", "--heads-file", str(heads_file),
                       "--matcher", "model", "--model", str(model_path),
                       "--embeddings", str(emb_path))
    assert code == 0
    assert len(out.splitlines()) > 0


def test_resplit_command_with_report(tmp_path, capsys):
    pool = resplit_pool(n_singleton=30, n_triangles=8, n_dense=100, dense_vocab=30)
    pool_path = tmp_path / "pool.jsonl"
    pool.to_jsonl(pool_path)
    out_train = tmp_path / "train.jsonl"
    out_test = tmp_path / "test.jsonl"
    code, out, _ = run(capsys, "resplit", "--input", str(pool_path), "--n", "0",
                       "--seed", "5", "--out-train", str(out_train),
                       "--out-test", str(out_test), "--report")
    assert code == 0
    report = json.loads(out)
    assert report["overlap_without_stopwords"] == 0.0
    train = MatcherDataset.from_jsonl(out_train)
    test = MatcherDataset.from_jsonl(out_test)
    assert len(train) + len(test) == len(pool)


def test_resplit_infeasible_exit_code(tmp_path, capsys):
    pool_path = tmp_path / "pool.jsonl"
    rows = [json.dumps({"head": f"zebra item{i}", "labels": ["physical"]})
            for i in range(4)]
    pool_path.write_text("".join(r + "\n" for r in rows))
    code, _, err = run(capsys, "resplit", "--input", str(pool_path), "--n", "0",
                       "--out-train", str(tmp_path / "t.jsonl"),
                       "--out-test", str(tmp_path / "s.jsonl"))
    assert code == 4
    assert "error" in err


def test_eval_command_stub(tmp_path, capsys):
    graph = KnowledgeGraph([
        KnowledgeTuple("a", "r", ["to <stub:r:a>"]),
        KnowledgeTuple("b", "r", ["something else"]),
    ])
    path = tmp_path / "refs.jsonl"
    graph.to_jsonl(path)
    code, out, _ = run(capsys, "eval", "--model", "stub", "--graph", str(path),
                       "--metrics", "bleu,rouge_l")
    assert code == 0
    report = json.loads(out)
    assert set(report["scores"]) == {"bleu", "rouge_l"}
    assert report["n_candidates"] == 2


def test_filter_command(tmp_path, capsys):
    graph = KnowledgeGraph([
        KnowledgeTuple("alpha", "rel", ["alpha"]),
        KnowledgeTuple("omega", "rel", ["omega"]),
    ])
    graph_path = tmp_path / "g.jsonl"
    graph.to_jsonl(graph_path)
    emb_path = tmp_path / "emb.txt"
    emb_path.write_text("alpha 1.0 0.0\nrel 0.5 0.5\nomega 0.0 1.0\n")
    kept_path = tmp_path / "kept.jsonl"
    judg_path = tmp_path / "judgments.jsonl"
    code, _, _ = run(capsys, "filter", "--graph", str(graph_path),
                     "--context", "alpha rel alpha", "--threshold", "0.9",
                     "--embeddings", str(emb_path), "--out", str(kept_path),
                     "--judgments", str(judg_path))
    assert code == 0
    kept = KnowledgeGraph.from_jsonl(kept_path)
    assert [t.head.text for t in kept] == ["alpha"]
    judgments = [json.loads(l) for l in judg_path.read_text().splitlines()]
    assert len(judgments) == 2
    assert judgments[0]["keep"] is True and judgments[1]["keep"] is False


def test_api_backend_without_key_exits_3(tmp_path, capsys, monkeypatch):
    monkeypatch.delenv("KOGITO_API_KEY", raising=False)
    monkeypatch.delenv("KOGITO_API_URL", raising=False)
    code, _, err = run(capsys, "infer", "--heads", "hammer", "--matcher", "base",
                       "--relations", "xNeed", "--backend", "api")
    assert code == 3
    assert "error" in err


def test_custom_relations_flag(tmp_path, capsys):
    rels = tmp_path / "custom.json"
    rels.write_text(json.dumps([{"name": "xDreams", "group": "social"}]))
    code, out, _ = run(capsys, "infer", "--heads", "PersonX naps", "--dry-run",
                       "--matcher", "base", "--relations", "xDreams",
                       "--custom-relations", str(rels))
    assert code == 0
    assert json.loads(out.strip())["relation"] == "xDreams"
