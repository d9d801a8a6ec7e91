"""Rule-based coarse POS tagger: lexicon lookup, inflection analysis,
suffix rules, NOUN default. Deterministic and context-free."""

from __future__ import annotations

import re
from dataclasses import dataclass

from .lexicon import (
    ADJ, ADV, AUX_LEMMAS, IRREGULAR_VERB_LEMMA, LEXICON, NOUN, NUM, PUNCT,
    VERB, VERB_LEMMAS,
)

_TOKEN_RE = re.compile(r"[A-Za-z0-9]+(?:['’-][A-Za-z0-9]+)*|[^\sA-Za-z0-9]")
_NUMERIC_RE = re.compile(r"^\d[\d.,:/%-]*$")

_NOUN_SUFFIXES = ("tion", "sion", "ment", "ness", "ance", "ence", "ship",
                  "hood", "ism", "ity", "ology")
_ADJ_SUFFIXES = ("ous", "ful", "less", "ive", "able", "ible", "ish")


@dataclass(frozen=True)
class TaggedToken:
    surface: str
    tag: str


def tokenize(text: str) -> list[str]:
    """Word and punctuation tokens; apostrophes and hyphens bind words."""
    return _TOKEN_RE.findall(text)


def _verb_inflection_candidates(w: str) -> list[str]:
    cands = []
    n = len(w)
    if w.endswith("ies") and n > 4:
        cands.append(w[:-3] + "y")
    if w.endswith("es") and n > 3:
        cands.append(w[:-2])
    if w.endswith("s") and not w.endswith("ss") and n > 2:
        cands.append(w[:-1])
    if w.endswith("ing") and n > 4:
        stem = w[:-3]
        cands.extend([stem, stem + "e"])
        if len(stem) > 2 and stem[-1] == stem[-2]:
            cands.append(stem[:-1])
    if w.endswith("ed") and n > 3:
        stem = w[:-2]
        cands.extend([stem, w[:-1]])
        if len(stem) > 2 and stem[-1] == stem[-2]:
            cands.append(stem[:-1])
    return cands


def tag_word(word: str) -> str:
    """Coarse POS tag for one token."""
    if not any(c.isalnum() for c in word):
        return PUNCT
    if _NUMERIC_RE.match(word):
        return NUM
    w = word.lower()
    if w in LEXICON:
        return LEXICON[w]
    cands = _verb_inflection_candidates(w)
    for c in cands:
        if c in VERB_LEMMAS:
            return VERB
    for c in cands:
        if LEXICON.get(c) == NOUN:
            return NOUN
    if w.endswith("ly") and len(w) > 3:
        return ADV
    if w.endswith(_NOUN_SUFFIXES):
        return NOUN
    if w.endswith(("ing", "ed")) and len(w) > 4:
        return VERB
    if w.endswith(_ADJ_SUFFIXES):
        return ADJ
    return NOUN


def tag_text(text: str) -> list[TaggedToken]:
    return [TaggedToken(tok, tag_word(tok)) for tok in tokenize(text)]


def verb_lemma(word: str) -> str:
    """Crude verb lemma by irregular-form map and suffix stripping."""
    w = word.lower()
    if w in IRREGULAR_VERB_LEMMA:
        return IRREGULAR_VERB_LEMMA[w]
    if w in VERB_LEMMAS:
        return w
    for c in _verb_inflection_candidates(w):
        if c in VERB_LEMMAS:
            return c
    if w.endswith("ies") and len(w) > 4:
        return w[:-3] + "y"
    if w.endswith(("ches", "shes", "sses", "xes", "zes", "oes")):
        return w[:-2]
    if w.endswith("s") and not w.endswith("ss") and len(w) > 2:
        return w[:-1]
    if w.endswith("ing") and len(w) > 4:
        stem = w[:-3]
        return stem[:-1] if len(stem) > 2 and stem[-1] == stem[-2] else stem
    if w.endswith("ed") and len(w) > 3:
        stem = w[:-2]
        return stem[:-1] if len(stem) > 2 and stem[-1] == stem[-2] else stem
    return w


def is_auxiliary(word: str) -> bool:
    return verb_lemma(word) in AUX_LEMMAS
