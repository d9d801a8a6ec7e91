"""Candidate knowledge-head extraction from raw text.

Stages: sentence segmentation (punctuation + abbreviation guard), coarse
POS tagging, NP/VP chunking, and string-match deduplication. Pure and
deterministic; safe for concurrent use.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..core.knowledge import KnowledgeHead
from ..errors import UsageError
from .lexicon import ADJ, ADP, ADV, DET, NOUN, NUM, PRON, PUNCT, VERB
from .tagger import TaggedToken, is_auxiliary, tag_text, verb_lemma

SENTENCE = "sentence"
NOUN_PHRASE = "noun_phrase"
VERB_PHRASE = "verb_phrase"
EXTRACTOR_NAMES = (SENTENCE, NOUN_PHRASE, VERB_PHRASE)

# Aliases accepted from CLI flags and config files.
EXTRACTOR_ALIASES = {"np": NOUN_PHRASE, "vp": VERB_PHRASE, "sent": SENTENCE}

DEFAULT_ABBREVIATIONS = frozenset("""
dr mr mrs ms prof sr jr st vs etc fig al no inc ltd co corp mt capt sgt
gen rev hon pres gov sen rep dept univ approx est min max avg vol
""".split())

_TERMINALS = ".!?"
_TRAILERS = "\"')]}’”"

_DET_WORDS = frozenset("a an the".split())


@dataclass(frozen=True)
class ExtractedHead:
    head: KnowledgeHead
    form: str
    source_sentence_index: int


def normalize_extractors(extractors) -> set[str]:
    out = set()
    for name in extractors:
        canonical = EXTRACTOR_ALIASES.get(name, name)
        if canonical not in EXTRACTOR_NAMES:
            raise UsageError(f"unknown extractor {name!r}")
        out.add(canonical)
    if not out:
        raise UsageError("at least one extractor is required")
    return out


def _word_before(text: str, pos: int) -> str:
    end = pos
    start = end
    while start > 0 and (text[start - 1].isalnum() or text[start - 1] in "'-"):
        start -= 1
    return text[start:end]


def segment_sentences(text: str, abbreviations: frozenset[str] = DEFAULT_ABBREVIATIONS,
                      single_letter_guard: bool = True) -> list[str]:
    """Split on sentence-final punctuation followed by whitespace and an
    uppercase letter. ``abbreviations`` (periods only) and, when enabled,
    single-letter initials suppress the split."""
    segments = []
    start = 0
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch not in _TERMINALS:
            i += 1
            continue
        j = i + 1
        while j < n and (text[j] in _TERMINALS or text[j] in _TRAILERS):
            j += 1
        k = j
        while k < n and text[k].isspace():
            k += 1
        boundary = k > j and k < n and text[k].isupper()
        if boundary and ch == "." and text[i - 1:i].isalnum():
            word = _word_before(text, i)
            if word.lower() in abbreviations:
                boundary = False
            elif single_letter_guard and len(word) == 1 and word.isalpha():
                boundary = False
        if boundary:
            segment = text[start:j].strip()
            if segment:
                segments.append(segment)
            start = k
            i = k
        else:
            i = j
    tail = text[start:].strip()
    if tail:
        segments.append(tail)
    return segments


def dedup_key(text: str) -> str:
    """Case-folded, whitespace-normalized key with leading determiners
    stripped; 'a hammer' and 'Hammer' collide."""
    words = text.lower().split()
    while words and words[0] in _DET_WORDS:
        words = words[1:]
    return " ".join(words)


def _np_chunks(words: list[TaggedToken]) -> list[list[TaggedToken]]:
    """Maximal DET? (ADJ|NUM)* NOUN+ chunks, left to right."""
    chunks = []
    i = 0
    n = len(words)
    while i < n:
        j = i
        if words[j].tag == DET:
            j += 1
        while j < n and words[j].tag in (ADJ, NUM):
            j += 1
        k = j
        while k < n and words[k].tag == NOUN:
            k += 1
        if k > j:
            chunks.append(words[i:k])
            i = k
        else:
            i += 1
    return chunks


def _np_variants(chunk: list[TaggedToken]) -> list[str]:
    """Texts emitted for one NP chunk: the chunk minus its determiner, the
    bare noun core when modifiers precede it, and each individual noun of a
    multi-noun core."""
    core = chunk[1:] if chunk[0].tag == DET else chunk
    nouns = [t for t in chunk if t.tag == NOUN]
    out = [" ".join(t.surface for t in core)]
    if len(nouns) < len(core):
        out.append(" ".join(t.surface for t in nouns))
    if len(nouns) > 1:
        out.extend(t.surface for t in nouns)
    return out


def _vp_chunks(words: list[TaggedToken]) -> list[str]:
    """Verb-phrase texts: lemmatized non-auxiliary verb plus the head noun
    of the noun phrase that follows it, function words dropped."""
    out = []
    i = 0
    n = len(words)
    while i < n:
        if words[i].tag == VERB and not is_auxiliary(words[i].surface):
            j = i + 1
            while j < n and words[j].tag in (DET, ADJ, ADV, NUM, ADP):
                j += 1
            k = j
            while k < n and words[k].tag == NOUN:
                k += 1
            if k > j:
                out.append(f"{verb_lemma(words[i].surface)} {words[k - 1].surface}")
                i = k
                continue
        i += 1
    return out


def _strip_terminal(sentence: str) -> str:
    return sentence.rstrip("".join((_TERMINALS, _TRAILERS, " "))) or sentence


def extract_heads(text: str, extractors=(SENTENCE, NOUN_PHRASE, VERB_PHRASE)) -> list[ExtractedHead]:
    """Extract candidate heads from ``text`` with the enabled extractors.

    Results are deduplicated by case-folded, whitespace-normalized string
    equality (leading determiners ignored); first occurrence wins and
    order is preserved.
    """
    enabled = normalize_extractors(extractors)
    out: list[ExtractedHead] = []
    seen: set[str] = set()

    def emit(head_text: str, form: str, sentence_index: int) -> None:
        head_text = head_text.strip()
        if not head_text:
            return
        key = dedup_key(head_text)
        if not key or key in seen:
            return
        seen.add(key)
        out.append(ExtractedHead(KnowledgeHead(head_text), form, sentence_index))

    for si, sentence in enumerate(segment_sentences(text)):
        tokens = tag_text(sentence)
        words = [t for t in tokens if t.tag != PUNCT]
        if SENTENCE in enabled:
            emit(_strip_terminal(sentence), SENTENCE, si)
        if NOUN_PHRASE in enabled:
            for chunk in _np_chunks(words):
                for variant in _np_variants(chunk):
                    emit(variant, NOUN_PHRASE, si)
        if VERB_PHRASE in enabled:
            for vp in _vp_chunks(words):
                emit(vp, VERB_PHRASE, si)
    return out


def classify_head_form(head: KnowledgeHead | str) -> str:
    """Classify a head as sentence, verb phrase, or noun phrase.

    Sentence: a subject-like token (noun or pronoun) precedes a verb.
    Verb phrase: the head starts with a verb. Noun phrase otherwise.
    """
    text = head.text if isinstance(head, KnowledgeHead) else head
    words = [t for t in tag_text(text) if t.tag != PUNCT]
    if not words:
        return NOUN_PHRASE
    subject_seen = False
    for token in words:
        if token.tag == VERB and subject_seen:
            return SENTENCE
        if token.tag in (NOUN, PRON):
            subject_seen = True
    if words[0].tag == VERB:
        return VERB_PHRASE
    return NOUN_PHRASE
