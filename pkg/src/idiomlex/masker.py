"""Replace detected idioms with polarity masks and score the result."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .detector import Match
from .lexicon import Polarity

NG_MASK = "NG_Phrase"
PO_MASK = "PO_Phrase"
MASKS = {Polarity.NG: NG_MASK, Polarity.PO: PO_MASK}

DEFAULT_IDIOM_WEIGHT = 3


class MaskError(ValueError):
    pass


@dataclass(frozen=True)
class Replacement:
    char_start: int  # span in the original text
    char_end: int
    original: str
    mask: str
    idiom_id: str
    polarity: Polarity
    masked_start: int  # where the mask sits in masked_text

    def to_dict(self) -> dict:
        return {
            "char_span": [self.char_start, self.char_end],
            "original": self.original,
            "mask": self.mask,
            "idiom_id": self.idiom_id,
            "polarity": self.polarity.value,
            "masked_start": self.masked_start,
        }

    @classmethod
    def from_dict(cls, d: dict) -> Replacement:
        return cls(d["char_span"][0], d["char_span"][1], d["original"], d["mask"],
                   d["idiom_id"], Polarity(d["polarity"]), d["masked_start"])


@dataclass(frozen=True)
class MaskedDocument:
    masked_text: str
    replacements: tuple[Replacement, ...]

    def to_dict(self) -> dict:
        return {"masked_text": self.masked_text, "replacements": [r.to_dict() for r in self.replacements]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)

    @classmethod
    def from_dict(cls, d: dict) -> MaskedDocument:
        return cls(d["masked_text"], tuple(Replacement.from_dict(r) for r in d["replacements"]))


def mask(text: str, matches: Sequence[Match]) -> MaskedDocument:
    """Swap each match's character span for ``NG_Phrase`` or ``PO_Phrase``.

    Spans must be in bounds and pairwise disjoint, as ``detect`` produces
    them.  Text between spans, whitespace included, is left untouched.
    """
    ordered = sorted(matches, key=lambda m: (m.char_start, m.char_end))
    prev_end = 0
    for m in ordered:
        if not 0 <= m.char_start < m.char_end <= len(text):
            raise MaskError(f"span [{m.char_start}, {m.char_end}) out of bounds for text of length {len(text)}")
        if m.char_start < prev_end:
            raise MaskError(f"span [{m.char_start}, {m.char_end}) overlaps the previous match")
        prev_end = m.char_end

    pieces = []
    replacements = []
    cursor = 0
    out_len = 0
    for m in ordered:
        gap = text[cursor:m.char_start]
        pieces.append(gap)
        out_len += len(gap)
        token = MASKS[m.polarity]
        replacements.append(Replacement(m.char_start, m.char_end, text[m.char_start:m.char_end],
                                        token, m.idiom_id, m.polarity, out_len))
        pieces.append(token)
        out_len += len(token)
        cursor = m.char_end
    pieces.append(text[cursor:])
    return MaskedDocument("".join(pieces), tuple(replacements))


def unmask(doc: MaskedDocument) -> str:
    """Put the original spans back; inverse of :func:`mask`."""
    text = doc.masked_text
    # right to left so earlier offsets stay valid
    for r in sorted(doc.replacements, key=lambda r: r.masked_start, reverse=True):
        end = r.masked_start + len(r.mask)
        if text[r.masked_start:end] != r.mask:
            raise MaskError(f"no {r.mask} at offset {r.masked_start}")
        text = text[:r.masked_start] + r.original + text[end:]
    return text


class Label(str, Enum):
    PO = "PO"
    NG = "NG"
    NEUTRAL = "NEUTRAL"


@dataclass(frozen=True)
class SentimentScore:
    net: float
    label: Label

    def __str__(self) -> str:
        net = int(self.net) if float(self.net).is_integer() else self.net
        return f"{net} {self.label.value}"

    def to_dict(self) -> dict:
        net = int(self.net) if float(self.net).is_integer() else self.net
        return {"net": net, "label": self.label.value}


def score(matches: Iterable[Match | Polarity], idiom_weight: int = DEFAULT_IDIOM_WEIGHT,
          extra_terms: Iterable[float] = ()) -> SentimentScore:
    """Net sentiment: +/-idiom_weight per idiom, plus optional word scores.

    ``extra_terms`` are per-word sentiment values in [-1, 1] from whatever
    word lexicon the caller has; none ships with this package.
    """
    if isinstance(idiom_weight, bool) or not isinstance(idiom_weight, int) or not 1 <= idiom_weight <= 3:
        raise ValueError(f"idiom_weight must be an integer in 1..3, got {idiom_weight!r}")
    net = 0
    for m in matches:
        pol = m if isinstance(m, Polarity) else m.polarity
        net += pol.sign * idiom_weight
    extras = list(extra_terms)
    for w in extras:
        if not -1 <= w <= 1:
            raise ValueError(f"extra term weight {w} outside [-1, 1]")
    if extras:
        net = net + math.fsum(extras)
    label = Label.PO if net > 0 else Label.NG if net < 0 else Label.NEUTRAL
    return SentimentScore(net, label)
