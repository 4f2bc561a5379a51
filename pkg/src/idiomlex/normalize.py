"""Arabic text normalization and span-preserving tokenization.

Both the lexicon and the detector go through these functions, so an idiom
and a candidate phrase are always compared in the same normal form.
"""
from __future__ import annotations

import unicodedata
from dataclasses import dataclass

TATWEEL = "ـ"
# fathatan .. sukun
DIACRITICS = frozenset(chr(c) for c in range(0x064B, 0x0653))

_ALEF_VARIANTS = {"أ": "ا", "إ": "ا", "آ": "ا"}
_ALEF_MAQSURA = "ى"
_YAA = "ي"
_TAA_MARBUTA = "ة"
_HAA = "ه"


def _fold_chars(text: str, fold_taa_marbuta: bool) -> str:
    out = []
    for ch in text:
        if ch == TATWEEL or ch in DIACRITICS:
            continue
        ch = _ALEF_VARIANTS.get(ch, ch)
        if ch == _ALEF_MAQSURA:
            ch = _YAA
        elif fold_taa_marbuta and ch == _TAA_MARBUTA:
            ch = _HAA
        out.append(ch)
    return "".join(out)


def _fold(text: str, fold_taa_marbuta: bool) -> str:
    # Stripping a mark can expose a new composable pair (alef + hamza above
    # behind a madda, say), so recompose until the text stops changing.
    prev = None
    while text != prev:
        prev = text
        text = _fold_chars(unicodedata.normalize("NFC", text), fold_taa_marbuta)
    return text


def normalize(text: str, *, fold_taa_marbuta: bool = False) -> str:
    """Return the canonical matching form of ``text``.

    NFC, then tatweel and harakat (fathatan through sukun) removed, alef
    variants folded to bare alef, alef maqsura folded to yaa, whitespace runs
    collapsed to one space and the ends trimmed.  Idempotent.
    """
    return " ".join(_fold(text, fold_taa_marbuta).split())


def is_delimiter(ch: str) -> bool:
    """Whitespace and every Unicode punctuation (P*) or symbol (S*) character."""
    return ch.isspace() or unicodedata.category(ch)[0] in "PS"


@dataclass(frozen=True, slots=True)
class Token:
    text: str
    char_start: int
    char_end: int


@dataclass(frozen=True, slots=True)
class TokenizedText:
    original: str
    tokens: tuple[Token, ...]

    @property
    def texts(self) -> list[str]:
        return [t.text for t in self.tokens]

    def __len__(self) -> int:
        return len(self.tokens)


def tokenize(text: str, *, fold_taa_marbuta: bool = False) -> TokenizedText:
    """Split ``text`` on whitespace and punctuation.

    Token offsets are half-open and index the original string; each token's
    ``text`` is its normalized form.  Runs that normalize to nothing (a stray
    diacritic, a lone tatweel) produce no token.
    """
    tokens: list[Token] = []
    start = None
    for i, ch in enumerate(text):
        if is_delimiter(ch):
            if start is not None:
                _emit(text, start, i, tokens, fold_taa_marbuta)
                start = None
        elif start is None:
            start = i
    if start is not None:
        _emit(text, start, len(text), tokens, fold_taa_marbuta)
    return TokenizedText(text, tuple(tokens))


def _emit(text, start, end, tokens, fold_taa_marbuta):
    # Leading combining marks hang off the preceding delimiter (NFC may even
    # fuse them into it), so they never start a token.  Tatweel is skipped
    # too: normalization deletes it and would leave such marks leading.
    while start < end and (text[start] == TATWEEL or unicodedata.category(text[start])[0] == "M"):
        start += 1
    if start == end:
        return
    norm = "".join(c for c in _fold(text[start:end], fold_taa_marbuta) if not is_delimiter(c))
    if norm:
        tokens.append(Token(norm, start, end))
