"""Word embedding tables: text-format loading and mean pooling.

File format: one line per word, ``word v1 ... vd``, space-separated
decimal floats. Unknown words map to the zero vector and are excluded
from the pooling denominator when at least one token is in vocabulary;
all-unknown texts pool to the zero vector.
"""

from __future__ import annotations

import hashlib
from typing import Iterable, Mapping

import numpy as np

from ..errors import ParseError
from ..tokenization import word_tokens


class EmbeddingTable:
    def __init__(self, vocab: Mapping[str, int], matrix: np.ndarray):
        self.vocab = dict(vocab)
        self.matrix = np.asarray(matrix, dtype=np.float64)
        if self.matrix.ndim != 2 or len(self.vocab) != self.matrix.shape[0]:
            raise ValueError("vocab size and matrix rows must match")

    @property
    def dim(self) -> int:
        return int(self.matrix.shape[1])

    def __contains__(self, word: str) -> bool:
        return word in self.vocab

    def __len__(self) -> int:
        return len(self.vocab)

    def vector(self, word: str) -> np.ndarray | None:
        idx = self.vocab.get(word)
        return None if idx is None else self.matrix[idx]

    def vocab_hash(self) -> str:
        """Stable fingerprint of the vocabulary and dimension, used to bind
        persisted matcher models to their embedding file."""
        h = hashlib.sha256()
        h.update(str(self.dim).encode())
        for word in sorted(self.vocab):
            h.update(b"\x00")
            h.update(word.encode("utf-8"))
        return h.hexdigest()

    def pool(self, text: str) -> np.ndarray:
        """Mean of in-vocabulary token vectors; zero vector if none."""
        return self.pool_tokens(word_tokens(text))

    def pool_tokens(self, tokens: Iterable[str]) -> np.ndarray:
        rows = [self.vocab[t] for t in tokens if t in self.vocab]
        if not rows:
            return np.zeros(self.dim, dtype=np.float64)
        return self.matrix[rows].mean(axis=0)

    @classmethod
    def from_mapping(cls, vectors: Mapping[str, Iterable[float]]) -> "EmbeddingTable":
        vocab = {w: i for i, w in enumerate(vectors)}
        matrix = np.array([list(v) for v in vectors.values()], dtype=np.float64)
        return cls(vocab, matrix)

    @classmethod
    def load(cls, path) -> "EmbeddingTable":
        vocab: dict[str, int] = {}
        rows: list[np.ndarray] = []
        dim = None
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                parts = line.rstrip("\n").split(" ")
                if len(parts) < 2 or not parts[0]:
                    if not line.strip():
                        continue
                    raise ParseError("expected 'word v1 ... vd'", line=lineno)
                word = parts[0]
                try:
                    vec = np.array([float(x) for x in parts[1:] if x], dtype=np.float64)
                except ValueError as e:
                    raise ParseError(f"bad float: {e}", line=lineno) from e
                if dim is None:
                    dim = vec.size
                elif vec.size != dim:
                    raise ParseError(f"expected {dim} values, got {vec.size}", line=lineno)
                if word in vocab:
                    continue  # first occurrence wins
                vocab[word] = len(rows)
                rows.append(vec)
        if not rows:
            raise ParseError("embedding file is empty", line=1)
        return cls(vocab, np.vstack(rows))

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            for word, idx in self.vocab.items():
                values = " ".join(repr(float(x)) for x in self.matrix[idx])
                fh.write(f"{word} {values}\n")
