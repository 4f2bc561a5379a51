"""Term-vector cosine similarity and Levenshtein edit distance."""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, Mapping, Sequence


class VectorMode(str, Enum):
    WORD_TF = "word"
    CHAR_TF = "char"


@dataclass(frozen=True)
class TermVector:
    """Sparse term-frequency vector.  Zero weights are never stored."""

    weights: Mapping[str, float]
    squared_norm: float = field(init=False)

    def __post_init__(self):
        clean = {t: w for t, w in self.weights.items() if w}
        if any(w < 0 for w in clean.values()):
            raise ValueError("term weights must be non-negative")
        object.__setattr__(self, "weights", clean)
        object.__setattr__(self, "squared_norm", sum(w * w for w in clean.values()))

    @property
    def norm(self) -> float:
        return math.sqrt(self.squared_norm)

    def scaled(self, factor: float) -> TermVector:
        return TermVector({t: w * factor for t, w in self.weights.items()})

    def __len__(self) -> int:
        return len(self.weights)


def vectorize(tokens: Iterable[str], mode: VectorMode = VectorMode.WORD_TF) -> TermVector:
    """Count terms: whole tokens for WORD_TF, non-space characters for CHAR_TF."""
    mode = VectorMode(mode)
    if mode is VectorMode.WORD_TF:
        return TermVector(Counter(tokens))
    return TermVector(Counter(ch for ch in " ".join(tokens) if ch != " "))


def cosine(a: TermVector, b: TermVector) -> float:
    """Cosine of the angle between two count vectors, 0.0 if either is empty.

    The product of squared norms is square-rooted in one step so that two
    identical integer-count vectors give exactly 1.0.
    """
    if not a.squared_norm or not b.squared_norm:
        return 0.0
    small, large = (a, b) if len(a) <= len(b) else (b, a)
    dot = sum(w * large.weights.get(t, 0) for t, w in small.weights.items())
    return min(1.0, max(0.0, dot / math.sqrt(a.squared_norm * b.squared_norm)))


def _rows(a: Sequence, b: Sequence) -> Iterator[list[int]]:
    """Yield the rows of the edit-distance table, row ``i`` for prefix ``a[:i]``."""
    prev = list(range(len(b) + 1))
    yield prev
    for i, ca in enumerate(a, 1):
        cur = [i]
        left = i
        for j, cb in enumerate(b):
            # substitute (or match), delete, insert
            best = prev[j] + (ca != cb)
            up = prev[j + 1] + 1
            if up < best:
                best = up
            if left + 1 < best:
                best = left + 1
            cur.append(best)
            left = best
        yield cur
        prev = cur


def edit_distance_table(a: Sequence, b: Sequence) -> list[list[int]]:
    """Full table: ``table[i][j]`` is the distance between ``a[:i]`` and ``b[:j]``."""
    return list(_rows(a, b))


def levenshtein(a: Sequence, b: Sequence) -> int:
    """Minimum number of single-element inserts, deletes and substitutions."""
    for row in _rows(a, b):
        pass
    return row[-1]


def normalized_levenshtein(a: Sequence, b: Sequence) -> float:
    """Edit distance over the longer length, in [0, 1]; two empties give 0.0."""
    longest = max(len(a), len(b))
    if longest == 0:
        return 0.0
    return levenshtein(a, b) / longest
