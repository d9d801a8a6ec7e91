"""Corpus-level n-gram generation metrics, implemented from scratch.

All metrics tokenize by lowercasing and splitting on whitespace.

- bleu: corpus BLEU with uniform 1..4-gram weights, clipped counts
  (clip = max count over references), multiplicative brevity penalty
  (reference length = closest per candidate, ties to shorter), and a
  1e-9 floor for zero n-gram precisions. Orders with no candidate
  n-grams at all are vacuous (precision 1), so exact matches score 1.0
  regardless of length.
- rouge_l: sentence-level LCS F-measure with beta = 1.2, best reference
  per candidate, averaged over the corpus.
- meteor: simplified two-stage unigram matcher (exact, then
  suffix-stripping stem), harmonic mean weighting recall 9:1, and the
  0.5 * (chunks / matches)^3 fragmentation penalty; best reference per
  candidate, averaged over the corpus. The synonym stage of the original
  metric is omitted (no lexical database dependency).
- cider: TF-IDF over 1..4-grams with document frequencies from the
  reference corpus, plain cosine per n averaged and scaled by 10;
  multiple references contribute by mean.

Scores lie in [0, 1] except cider in [0, 10]. Empty candidates score a
zero contribution rather than raising.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from ..core.knowledge import KnowledgeGraph
from ..errors import ValidationError
from ..models.base import DecodeConfig, KnowledgeModel

METRIC_NAMES = ("bleu", "rouge_l", "meteor", "cider")

_EPS = 1e-9


def _tokens(text: str) -> list[str]:
    return text.lower().split()


def _ngrams(tokens: list[str], n: int) -> Counter:
    return Counter(tuple(tokens[i:i + n]) for i in range(len(tokens) - n + 1))


def _validate(candidates: list[str], references: list[list[str]]) -> None:
    if len(candidates) != len(references):
        raise ValidationError(
            f"{len(candidates)} candidates vs {len(references)} reference lists")
    if not candidates:
        raise ValidationError("empty corpus")
    for i, refs in enumerate(references):
        if not refs:
            raise ValidationError(f"reference list {i} is empty")


# ---------------------------------------------------------------- BLEU

def bleu_corpus(candidates: list[str], references: list[list[str]],
                weights: tuple[float, ...] = (0.25, 0.25, 0.25, 0.25)) -> float:
    _validate(candidates, references)
    max_order = len(weights)
    clipped = [0] * max_order
    total = [0] * max_order
    cand_len = 0
    ref_len = 0
    for cand, refs in zip(candidates, references):
        c_toks = _tokens(cand)
        r_toks = [_tokens(r) for r in refs]
        cand_len += len(c_toks)
        ref_len += min((len(r) for r in r_toks),
                       key=lambda L: (abs(L - len(c_toks)), L))
        for n in range(1, max_order + 1):
            c_counts = _ngrams(c_toks, n)
            if not c_counts:
                continue
            max_ref = Counter()
            for r in r_toks:
                for gram, count in _ngrams(r, n).items():
                    if count > max_ref[gram]:
                        max_ref[gram] = count
            total[n - 1] += sum(c_counts.values())
            clipped[n - 1] += sum(min(count, max_ref[gram])
                                  for gram, count in c_counts.items())
    if cand_len == 0:
        return 0.0
    log_sum = 0.0
    for w, c, t in zip(weights, clipped, total):
        if t == 0:
            p = 1.0  # no n-grams of this order exist anywhere: vacuous
        elif c == 0:
            p = _EPS
        else:
            p = c / t
        log_sum += w * math.log(p)
    bp = 1.0 if cand_len > ref_len else math.exp(1.0 - ref_len / cand_len)
    return bp * math.exp(log_sum)


# -------------------------------------------------------------- ROUGE-L

def _lcs_length(a: list[str], b: list[str]) -> int:
    if not a or not b:
        return 0
    prev = [0] * (len(b) + 1)
    for x in a:
        cur = [0] * (len(b) + 1)
        for j, y in enumerate(b, 1):
            cur[j] = prev[j - 1] + 1 if x == y else max(prev[j], cur[j - 1])
        prev = cur
    return prev[-1]


def rouge_l_sentence(candidate: str, reference: str, beta: float = 1.2) -> float:
    c = _tokens(candidate)
    r = _tokens(reference)
    lcs = _lcs_length(c, r)
    if lcs == 0:
        return 0.0
    precision = lcs / len(c)
    recall = lcs / len(r)
    return ((1 + beta**2) * recall * precision) / (recall + beta**2 * precision)


def rouge_l_corpus(candidates: list[str], references: list[list[str]],
                   beta: float = 1.2) -> float:
    _validate(candidates, references)
    scores = [max(rouge_l_sentence(c, r, beta) for r in refs)
              for c, refs in zip(candidates, references)]
    return sum(scores) / len(scores)


# --------------------------------------------------------------- METEOR

_STEM_SUFFIXES = ("ing", "ed", "es", "s", "ly", "er", "est")


def _crude_stem(word: str) -> str:
    for suffix in _STEM_SUFFIXES:
        if word.endswith(suffix) and len(word) - len(suffix) >= 3:
            stem = word[: -len(suffix)]
            if len(stem) > 2 and stem[-1] == stem[-2] and stem[-1] not in "aeiou":
                stem = stem[:-1]
            return stem
    return word


def _align(c_toks: list[str], r_toks: list[str]) -> list[tuple[int, int]]:
    """Unigram alignment: exact matches first, then stem matches, each
    left-to-right to the first unmatched reference token."""
    matched_r: set[int] = set()
    alignment: dict[int, int] = {}
    for stage_key in (lambda w: w, _crude_stem):
        r_keys = [stage_key(w) for w in r_toks]
        for ci, cw in enumerate(c_toks):
            if ci in alignment:
                continue
            ck = stage_key(cw)
            for ri, rk in enumerate(r_keys):
                if ri not in matched_r and rk == ck:
                    alignment[ci] = ri
                    matched_r.add(ri)
                    break
    return sorted(alignment.items())


def meteor_sentence(candidate: str, reference: str) -> float:
    c_toks = _tokens(candidate)
    r_toks = _tokens(reference)
    if not c_toks or not r_toks:
        return 0.0
    pairs = _align(c_toks, r_toks)
    matches = len(pairs)
    if matches == 0:
        return 0.0
    precision = matches / len(c_toks)
    recall = matches / len(r_toks)
    f_mean = 10 * precision * recall / (recall + 9 * precision)
    chunks = 1
    for (pc, pr), (nc, nr) in zip(pairs, pairs[1:]):
        if nc != pc + 1 or nr != pr + 1:
            chunks += 1
    penalty = 0.5 * (chunks / matches) ** 3
    return f_mean * (1.0 - penalty)


def meteor_corpus(candidates: list[str], references: list[list[str]]) -> float:
    _validate(candidates, references)
    scores = [max(meteor_sentence(c, r) for r in refs)
              for c, refs in zip(candidates, references)]
    return sum(scores) / len(scores)


# ---------------------------------------------------------------- CIDEr

def cider_corpus(candidates: list[str], references: list[list[str]],
                 max_order: int = 4) -> float:
    _validate(candidates, references)
    n_items = len(candidates)
    log_n = math.log(n_items) if n_items > 1 else 0.0

    df: list[Counter] = [Counter() for _ in range(max_order)]
    for refs in references:
        grams_in_item: list[set] = [set() for _ in range(max_order)]
        for r in refs:
            toks = _tokens(r)
            for n in range(1, max_order + 1):
                grams_in_item[n - 1].update(_ngrams(toks, n).keys())
        for n in range(max_order):
            for gram in grams_in_item[n]:
                df[n][gram] += 1

    def tfidf(text: str, n: int) -> dict:
        counts = _ngrams(_tokens(text), n + 1)
        return {g: c * (log_n - math.log(max(1.0, df[n][g])))
                for g, c in counts.items()}

    def cosine(u: dict, v: dict) -> float:
        if not u or not v:
            return 0.0
        dot = sum(w * v[g] for g, w in u.items() if g in v)
        nu = math.sqrt(sum(w * w for w in u.values()))
        nv = math.sqrt(sum(w * w for w in v.values()))
        if nu == 0.0 or nv == 0.0:
            return 0.0
        return dot / (nu * nv)

    total = 0.0
    for cand, refs in zip(candidates, references):
        per_n = []
        for n in range(max_order):
            c_vec = tfidf(cand, n)
            sims = [cosine(c_vec, tfidf(r, n)) for r in refs]
            per_n.append(sum(sims) / len(sims))
        total += sum(per_n) / max_order
    return 10.0 * total / n_items


# ------------------------------------------------------------- frontend

_METRICS = {
    "bleu": bleu_corpus,
    "rouge_l": rouge_l_corpus,
    "meteor": meteor_corpus,
    "cider": cider_corpus,
}


def score_corpus(metric: str, candidates: list[str], references: list[list[str]],
                 **params) -> float:
    """Corpus score for one metric; see the module docstring for the
    exact definitions and parameter meanings."""
    if metric not in _METRICS:
        raise ValidationError(f"unknown metric {metric!r}; expected one of {METRIC_NAMES}")
    return _METRICS[metric](candidates, references, **params)


@dataclass
class EvalReport:
    scores: dict[str, float]
    n_candidates: int
    n_references: int
    n_failures: int = 0

    def to_dict(self) -> dict:
        return {
            "scores": dict(self.scores),
            "n_candidates": self.n_candidates,
            "n_references": self.n_references,
            "n_failures": self.n_failures,
        }


def evaluate_model(model: KnowledgeModel, refs: KnowledgeGraph,
                   metrics=METRIC_NAMES, decode: DecodeConfig | None = None) -> EvalReport:
    """Regenerate tails for ``refs`` and score the first generated tail of
    each tuple against all of its reference tails."""
    ref_tuples = list(refs)
    if not ref_tuples:
        raise ValidationError("reference graph is empty")
    for i, t in enumerate(ref_tuples):
        if not t.tails:
            raise ValidationError(f"reference tuple {i} has no tails")
    partial = KnowledgeGraph(t.with_tails([]) for t in ref_tuples)
    generated, failures = model.generate_with_diagnostics(partial, decode)
    candidates = [t.tails[0] if t.tails else "" for t in generated]
    references = [list(t.tails) for t in ref_tuples]
    scores = {m: score_corpus(m, candidates, references) for m in metrics}
    return EvalReport(
        scores=scores,
        n_candidates=len(candidates),
        n_references=sum(len(r) for r in references),
        n_failures=len(failures),
    )
