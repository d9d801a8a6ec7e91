"""Shared word tokenization used by matching, embeddings, and filtering.

Tokenization is deliberately simple and stable: lowercase, split on any
run of non-alphanumeric characters. Metric modules use their own
whitespace tokenization and do not go through here.
"""

from __future__ import annotations

import re

_WORD_RE = re.compile(r"[a-z0-9]+")


def word_tokens(text: str) -> list[str]:
    """Lowercased alphanumeric tokens of ``text``, in order."""
    return _WORD_RE.findall(text.lower())
