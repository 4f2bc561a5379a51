"""Buckwalter transliteration (original, non XML-safe variant).

The table covers the 28 letters, the hamza carriers, taa marbuta, alef
maqsura, the harakat plus shadda/sukun/dagger alef, and the three Arabic
punctuation marks.  Tatweel is deliberately absent: it carries no letter and
the normalizer strips it anyway, so ``_`` stays free as an error sentinel.
ASCII digits, whitespace and a few neutral punctuation marks pass through.
"""
from __future__ import annotations

BW_TO_AR: dict[str, str] = {
    "'": "ء",  # hamza
    "|": "آ",  # alef madda
    ">": "أ",  # alef hamza above
    "&": "ؤ",  # waw hamza
    "<": "إ",  # alef hamza below
    "}": "ئ",  # yaa hamza
    "A": "ا",
    "b": "ب",
    "p": "ة",  # taa marbuta
    "t": "ت",
    "v": "ث",
    "j": "ج",
    "H": "ح",
    "x": "خ",
    "d": "د",
    "*": "ذ",
    "r": "ر",
    "z": "ز",
    "s": "س",
    "$": "ش",
    "S": "ص",
    "D": "ض",
    "T": "ط",
    "Z": "ظ",
    "E": "ع",
    "g": "غ",
    "f": "ف",
    "q": "ق",
    "k": "ك",
    "l": "ل",
    "m": "م",
    "n": "ن",
    "h": "ه",
    "w": "و",
    "Y": "ى",  # alef maqsura
    "y": "ي",
    "F": "ً",  # fathatan
    "N": "ٌ",
    "K": "ٍ",
    "a": "َ",
    "u": "ُ",
    "i": "ِ",
    "~": "ّ",  # shadda
    "o": "ْ",  # sukun
    "`": "ٰ",  # dagger alef
    "{": "ٱ",  # alef wasla
    ",": "،",
    ";": "؛",
    "?": "؟",
}

AR_TO_BW: dict[str, str] = {ar: bw for bw, ar in BW_TO_AR.items()}

PASSTHROUGH = frozenset("0123456789.!:-()\"%/")


class TransliterationError(ValueError):
    """A character has no Buckwalter counterpart."""

    def __init__(self, char: str, offset: int, direction: str):
        self.char = char
        self.offset = offset
        super().__init__(f"{direction}: no mapping for {char!r} (U+{ord(char):04X}) at offset {offset}")


def _convert(text: str, table: dict[str, str], direction: str) -> str:
    out = []
    for i, ch in enumerate(text):
        if ch in table:
            out.append(table[ch])
        elif ch in PASSTHROUGH or ch.isspace():
            out.append(ch)
        else:
            raise TransliterationError(ch, i, direction)
    return "".join(out)


def to_buckwalter(arabic: str) -> str:
    """Arabic script to Buckwalter ASCII, one character at a time.

    >>> to_buckwalter("حكم قراقوش")
    'Hkm qrAqw$'
    """
    return _convert(arabic, AR_TO_BW, "to_buckwalter")


def from_buckwalter(bw: str) -> str:
    """Inverse of :func:`to_buckwalter`."""
    return _convert(bw, BW_TO_AR, "from_buckwalter")
