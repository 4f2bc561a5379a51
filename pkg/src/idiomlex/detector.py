"""N-gram idiom detection: cosine screening plus edit-distance disambiguation.

Every contiguous 2..6 token window of the input is paired with each lexicon
idiom it shares at least one term with.  Each pair gets a cosine score over
term vectors and a length-normalized character edit distance.  Overlapping
pairs are resolved greedily, best first (lowest edit distance, then highest
cosine, then longest span, then leftmost), and the survivors are kept when
they clear the thresholds of the chosen pipeline:

* ``COSINE_ONLY``: cosine > cosine_threshold
* ``EDIT_ONLY``:   norm_edit <= norm_edit_threshold
* ``COMBINED``:    both

Overlap resolution runs on the unthresholded pool, before the threshold
test.  That keeps the output monotone in both thresholds, and makes COMBINED
exactly the intersection of the two single-measure pipelines.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .lexicon import Lexicon, Polarity
from .normalize import TokenizedText, tokenize
from .similarity import TermVector, VectorMode, cosine, levenshtein, vectorize


class Pipeline(str, Enum):
    COSINE_ONLY = "cosine"
    EDIT_ONLY = "edit"
    COMBINED = "combined"


class DetectorError(ValueError):
    pass


@dataclass(frozen=True)
class DetectorConfig:
    cosine_threshold: float = 0.7
    norm_edit_threshold: float = 0.25
    vector_mode: VectorMode = VectorMode.WORD_TF
    min_n: int = 2
    max_n: int = 6
    pipeline: Pipeline = Pipeline.COMBINED
    # Inverted-index pruning; switching it off must not change the output.
    prefilter: bool = True

    def __post_init__(self):
        object.__setattr__(self, "vector_mode", VectorMode(self.vector_mode))
        object.__setattr__(self, "pipeline", Pipeline(self.pipeline))
        if not 0 < self.cosine_threshold < 1:
            raise DetectorError(f"cosine_threshold must be in (0, 1), got {self.cosine_threshold}")
        if not 0 <= self.norm_edit_threshold <= 1:
            raise DetectorError(f"norm_edit_threshold must be in [0, 1], got {self.norm_edit_threshold}")
        if not 2 <= self.min_n <= self.max_n:
            raise DetectorError(f"need 2 <= min_n <= max_n, got {self.min_n}, {self.max_n}")

    def accepts(self, cosine_score: float, norm_edit: float) -> bool:
        cos_ok = cosine_score > self.cosine_threshold
        edit_ok = norm_edit <= self.norm_edit_threshold
        if self.pipeline is Pipeline.COSINE_ONLY:
            return cos_ok
        if self.pipeline is Pipeline.EDIT_ONLY:
            return edit_ok
        return cos_ok and edit_ok


@dataclass(frozen=True)
class CandidatePhrase:
    token_start: int
    token_end: int
    terms: tuple[str, ...]
    char_start: int
    char_end: int

    @property
    def text(self) -> str:
        return " ".join(self.terms)

    def __len__(self) -> int:
        return self.token_end - self.token_start

    def overlaps(self, other: CandidatePhrase) -> bool:
        return self.token_start < other.token_end and other.token_start < self.token_end


@dataclass(frozen=True)
class ScoredCandidate:
    candidate: CandidatePhrase
    idiom_id: str
    cosine_score: float
    edit_distance: int
    norm_edit: float

    def rank_key(self):
        c = self.candidate
        return (self.norm_edit, -self.cosine_score, -len(c), c.token_start, self.idiom_id)


@dataclass(frozen=True)
class Match:
    idiom_id: str
    surface: str
    polarity: Polarity
    token_start: int
    token_end: int
    char_start: int
    char_end: int
    cosine_score: float
    norm_edit: float
    pipeline: Pipeline
    text: str = ""

    def to_dict(self) -> dict:
        return {
            "idiom_id": self.idiom_id,
            "surface": self.surface,
            "polarity": self.polarity.value,
            "char_span": [self.char_start, self.char_end],
            "token_span": [self.token_start, self.token_end],
            "text": self.text,
            "cosine": self.cosine_score,
            "norm_edit": self.norm_edit,
            "pipeline": self.pipeline.value,
        }

    @classmethod
    def from_dict(cls, d: dict) -> Match:
        return cls(
            idiom_id=d["idiom_id"],
            surface=d.get("surface", ""),
            polarity=Polarity(d["polarity"]),
            token_start=d["token_span"][0],
            token_end=d["token_span"][1],
            char_start=d["char_span"][0],
            char_end=d["char_span"][1],
            cosine_score=d["cosine"],
            norm_edit=d["norm_edit"],
            pipeline=Pipeline(d["pipeline"]),
            text=d.get("text", ""),
        )


def window_count(n_tokens: int, min_n: int = 2, max_n: int = 6) -> int:
    return sum(max(0, n_tokens - n + 1) for n in range(min_n, max_n + 1))


def generate_candidates(text: TokenizedText, config: DetectorConfig | None = None) -> list[CandidatePhrase]:
    """All contiguous windows of min_n..max_n tokens, shorter windows first."""
    config = config or DetectorConfig()
    toks = text.tokens
    out = []
    for n in range(config.min_n, config.max_n + 1):
        for i in range(len(toks) - n + 1):
            window = toks[i:i + n]
            out.append(CandidatePhrase(i, i + n, tuple(t.text for t in window),
                                       window[0].char_start, window[-1].char_end))
    return out


def prefilter(candidates: Iterable[CandidatePhrase], lexicon: Lexicon) -> list[tuple[CandidatePhrase, frozenset[str]]]:
    """Pair each candidate with the idioms it shares a term with, via the index."""
    out = []
    for c in candidates:
        ids = lexicon.candidates_for(c.terms)
        if ids:
            out.append((c, frozenset(ids)))
    return out


def _pair_all(candidates: Iterable[CandidatePhrase], lexicon: Lexicon) -> list[tuple[CandidatePhrase, frozenset[str]]]:
    # Index-free reference path: scan every entry for a shared term.
    out = []
    for c in candidates:
        terms = set(c.terms)
        ids = frozenset(e.id for e in lexicon.entries if terms.intersection(e.terms))
        if ids:
            out.append((c, ids))
    return out


def score_pairs(pairs: Sequence[tuple[CandidatePhrase, Iterable[str]]], lexicon: Lexicon,
                mode: VectorMode = VectorMode.WORD_TF) -> list[ScoredCandidate]:
    """Cosine and edit distance for every (candidate, idiom) pair.

    Idioms whose length falls outside the 2..6 window are never scored.
    """
    idiom_vecs: dict[str, TermVector] = {}
    scored = []
    for cand, ids in pairs:
        cvec = vectorize(cand.terms, mode)
        ctext = cand.text
        for idiom_id in sorted(ids):
            entry = lexicon[idiom_id]
            if not entry.matchable:
                continue
            ivec = idiom_vecs.get(idiom_id)
            if ivec is None:
                ivec = idiom_vecs[idiom_id] = vectorize(entry.terms, mode)
            target = entry.normalized
            dist = levenshtein(ctext, target)
            scored.append(ScoredCandidate(cand, idiom_id, cosine(cvec, ivec), dist,
                                          dist / max(len(ctext), len(target))))
    return scored


def resolve_overlaps(scored: Iterable[ScoredCandidate]) -> list[ScoredCandidate]:
    """Greedy best-first selection of pairwise non-overlapping pairs."""
    chosen: list[ScoredCandidate] = []
    for sc in sorted(scored, key=ScoredCandidate.rank_key):
        if not any(sc.candidate.overlaps(k.candidate) for k in chosen):
            chosen.append(sc)
    return chosen


def detect(text: str, lexicon: Lexicon, config: DetectorConfig | None = None) -> list[Match]:
    """Find idiom occurrences in raw ``text``, sorted by position."""
    config = config or DetectorConfig()
    if not len(lexicon):
        raise DetectorError("empty lexicon")
    tt = tokenize(text, fold_taa_marbuta=lexicon.fold_taa_marbuta)
    candidates = generate_candidates(tt, config)
    pairs = prefilter(candidates, lexicon) if config.prefilter else _pair_all(candidates, lexicon)
    pool = score_pairs(pairs, lexicon, config.vector_mode)
    matches = []
    for sc in resolve_overlaps(pool):
        if not config.accepts(sc.cosine_score, sc.norm_edit):
            continue
        entry = lexicon[sc.idiom_id]
        c = sc.candidate
        matches.append(Match(
            idiom_id=entry.id,
            surface=entry.surface,
            polarity=entry.polarity,
            token_start=c.token_start,
            token_end=c.token_end,
            char_start=c.char_start,
            char_end=c.char_end,
            cosine_score=sc.cosine_score,
            norm_edit=sc.norm_edit,
            pipeline=config.pipeline,
            text=text[c.char_start:c.char_end],
        ))
    matches.sort(key=lambda m: (m.char_start, m.token_start))
    return matches
