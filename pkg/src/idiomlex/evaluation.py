"""Span-level evaluation of the three detection pipelines, and Cohen's kappa.

A prediction counts as a true positive when it names the same idiom as an
unclaimed gold span and overlaps more than half of that gold span.  Each
gold span can be claimed once.  Accuracy is TP / (TP + FP + FN); with no
spans at all on either side every metric is reported as 1.0.
"""
from __future__ import annotations

import io
import json
from dataclasses import dataclass, field, replace
from importlib import resources
from typing import Iterable, Sequence, TextIO

from .detector import DetectorConfig, Match, Pipeline, detect
from .lexicon import Lexicon, Polarity

ACCURACY_NOTE = "accuracy = TP / (TP + FP + FN); TP needs same idiom and > 50% overlap of the gold span"


class EvalError(ValueError):
    pass


@dataclass(frozen=True)
class GoldSpan:
    char_start: int
    char_end: int
    idiom_id: str
    polarity: Polarity


@dataclass(frozen=True)
class GoldDocument:
    text: str
    gold_spans: tuple[GoldSpan, ...] = ()

    def __post_init__(self):
        spans = sorted(self.gold_spans, key=lambda s: s.char_start)
        prev = 0
        for s in spans:
            if not 0 <= s.char_start < s.char_end <= len(self.text) or s.char_start < prev:
                raise EvalError(f"bad gold span [{s.char_start}, {s.char_end}) in {self.text[:40]!r}")
            prev = s.char_end

    @classmethod
    def from_dict(cls, d: dict, lexicon: Lexicon | None = None) -> GoldDocument:
        """Build from a JSON object.

        Spans are ``{"start", "end", "idiom", "polarity"}``.  ``idiom`` may be
        a lexicon id or the idiom's surface text (resolved when a lexicon is
        given); ``polarity`` defaults to the lexicon's.
        """
        spans = []
        for s in d.get("gold_spans", []):
            key = s.get("idiom_id") or s["idiom"]
            entry = lexicon.resolve(key) if lexicon is not None else None
            if lexicon is not None and entry is None:
                raise EvalError(f"gold idiom {key!r} is not in the lexicon")
            idiom_id = entry.id if entry else key
            pol = s.get("polarity") or (entry.polarity.value if entry else None)
            if pol is None:
                raise EvalError(f"gold span for {key!r} has no polarity")
            spans.append(GoldSpan(s["start"], s["end"], idiom_id, Polarity(pol)))
        return cls(d["text"], tuple(spans))


def read_gold_jsonl(stream: TextIO, lexicon: Lexicon | None = None) -> list[GoldDocument]:
    docs = []
    for lineno, line in enumerate(stream, 1):
        if not line.strip():
            continue
        try:
            docs.append(GoldDocument.from_dict(json.loads(line), lexicon))
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise EvalError(f"gold corpus line {lineno}: {exc}") from exc
    return docs


def _ratio(num: int, den: int) -> float:
    return num / den if den else 1.0


@dataclass(frozen=True)
class PipelineResult:
    pipeline: Pipeline
    true_positives: int = 0
    false_positives: int = 0
    false_negatives: int = 0

    @property
    def precision(self) -> float:
        return _ratio(self.true_positives, self.true_positives + self.false_positives)

    @property
    def recall(self) -> float:
        return _ratio(self.true_positives, self.true_positives + self.false_negatives)

    @property
    def f1(self) -> float:
        p, r = self.precision, self.recall
        return 2 * p * r / (p + r) if p + r else 0.0

    @property
    def accuracy(self) -> float:
        tp = self.true_positives
        return _ratio(tp, tp + self.false_positives + self.false_negatives)

    def __add__(self, other: PipelineResult) -> PipelineResult:
        return PipelineResult(self.pipeline,
                              self.true_positives + other.true_positives,
                              self.false_positives + other.false_positives,
                              self.false_negatives + other.false_negatives)

    def to_dict(self) -> dict:
        return {
            "pipeline": self.pipeline.value,
            "true_positives": self.true_positives,
            "false_positives": self.false_positives,
            "false_negatives": self.false_negatives,
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
            "accuracy": self.accuracy,
        }


@dataclass(frozen=True)
class EvalReport:
    results: dict[Pipeline, PipelineResult] = field(default_factory=dict)
    n_documents: int = 0

    def __getitem__(self, pipeline: Pipeline | str) -> PipelineResult:
        return self.results[Pipeline(pipeline)]

    def to_dict(self) -> dict:
        return {"documents": self.n_documents, "note": ACCURACY_NOTE,
                "pipelines": [r.to_dict() for r in self.results.values()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [f"# {ACCURACY_NOTE}", f"# documents: {self.n_documents}",
                 f"{'pipeline':<10} {'TP':>5} {'FP':>5} {'FN':>5} {'prec':>7} {'recall':>7} {'f1':>7} {'acc':>7}"]
        for r in self.results.values():
            lines.append(f"{r.pipeline.value:<10} {r.true_positives:>5} {r.false_positives:>5} "
                         f"{r.false_negatives:>5} {r.precision:>7.4f} {r.recall:>7.4f} {r.f1:>7.4f} {r.accuracy:>7.4f}")
        return "\n".join(lines)


def match_spans(predicted: Sequence[Match], gold: Sequence[GoldSpan]) -> tuple[int, int, int]:
    """(TP, FP, FN) for one document."""
    claimed = [False] * len(gold)
    tp = 0
    for m in sorted(predicted, key=lambda m: m.char_start):
        for k, g in enumerate(gold):
            if claimed[k] or g.idiom_id != m.idiom_id:
                continue
            overlap = min(m.char_end, g.char_end) - max(m.char_start, g.char_start)
            if overlap * 2 > g.char_end - g.char_start:
                claimed[k] = True
                tp += 1
                break
    return tp, len(predicted) - tp, len(gold) - tp


def evaluate(corpus: Sequence[GoldDocument], lexicon: Lexicon, config: DetectorConfig | None = None,
             pipelines: Iterable[Pipeline] = tuple(Pipeline)) -> EvalReport:
    """Run ``detect`` under each pipeline and count span-level hits."""
    if not corpus:
        raise EvalError("empty corpus")
    config = config or DetectorConfig()
    results = {}
    for p in pipelines:
        cfg = replace(config, pipeline=p)
        total = PipelineResult(p)
        for doc in corpus:
            total += PipelineResult(p, *match_spans(detect(doc.text, lexicon, cfg), doc.gold_spans))
        results[p] = total
    return EvalReport(results, len(corpus))


def cohen_kappa(labels_a: Sequence[Polarity], labels_b: Sequence[Polarity]) -> float:
    """Chance-corrected agreement between two annotators."""
    if len(labels_a) != len(labels_b):
        raise EvalError(f"label lists differ in length: {len(labels_a)} vs {len(labels_b)}")
    if not labels_a:
        raise EvalError("no labels")
    n = len(labels_a)
    observed = sum(a == b for a, b in zip(labels_a, labels_b)) / n
    classes = set(labels_a) | set(labels_b)
    expected = sum((list(labels_a).count(c) / n) * (list(labels_b).count(c) / n) for c in classes)
    if expected == 1:
        return 1.0
    return (observed - expected) / (1 - expected)


BUNDLED_CORPORA = {"micro": "micro_corpus.jsonl", "topics": "topics.jsonl"}


def bundled_corpus(name: str, lexicon: Lexicon) -> list[GoldDocument]:
    """Gold corpora shipped with the package.

    ``topics``: the two annotated topics used as golden detector examples.
    ``micro``: 30 constructed documents, ten with a verbatim idiom, ten with a
    one-word near miss of an idiom, ten with no idiom at all.
    """
    if name not in BUNDLED_CORPORA:
        raise EvalError(f"no bundled corpus {name!r}; choose from {sorted(BUNDLED_CORPORA)}")
    data = resources.files("idiomlex.data").joinpath(BUNDLED_CORPORA[name]).read_text("utf-8")
    return read_gold_jsonl(io.StringIO(data), lexicon)
