"""Idiom sentiment lexicon: TSV loading, inverted index and validation.

File format: UTF-8, one idiom per line, four tab-separated columns

    surface <TAB> gloss <TAB> buckwalter <TAB> polarity

``#`` starts a comment line; blank lines are skipped; fields may not contain
tabs and there is no quoting.  Polarity is ``PO`` or ``NG``.
"""
from __future__ import annotations

import hashlib
import io
import json
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from types import MappingProxyType
from typing import BinaryIO, Iterable, Mapping

from .buckwalter import TransliterationError, from_buckwalter
from .normalize import normalize, tokenize

MIN_TOKENS = 2
MAX_TOKENS = 6


class LexiconError(ValueError):
    pass


class Polarity(str, Enum):
    PO = "PO"
    NG = "NG"

    @classmethod
    def parse(cls, value: str) -> Polarity:
        try:
            return cls(value.strip())
        except ValueError:
            raise LexiconError(f"unknown polarity {value!r}, expected PO or NG") from None

    @property
    def sign(self) -> int:
        return 1 if self is Polarity.PO else -1

    @property
    def flipped(self) -> Polarity:
        return Polarity.NG if self is Polarity.PO else Polarity.PO


def entry_id(normalized_surface: str) -> str:
    """Stable id derived from the normalized surface, independent of row order."""
    digest = hashlib.sha1(normalized_surface.encode("utf-8")).hexdigest()
    return f"idm-{digest[:10]}"


@dataclass(frozen=True, slots=True)
class IdiomEntry:
    id: str
    surface: str
    gloss: str
    buckwalter: str
    polarity: Polarity
    terms: tuple[str, ...]

    @classmethod
    def create(cls, surface: str, gloss: str, buckwalter: str, polarity: Polarity | str,
               *, fold_taa_marbuta: bool = False) -> IdiomEntry:
        terms = tuple(tokenize(surface, fold_taa_marbuta=fold_taa_marbuta).texts)
        if not terms:
            raise LexiconError("empty surface")
        if not isinstance(polarity, Polarity):
            polarity = Polarity.parse(polarity)
        return cls(entry_id(" ".join(terms)), surface, gloss, buckwalter, polarity, terms)

    @property
    def normalized(self) -> str:
        return " ".join(self.terms)

    @property
    def matchable(self) -> bool:
        """Whether the 2..6 token n-gram window can ever cover this idiom."""
        return MIN_TOKENS <= len(self.terms) <= MAX_TOKENS


@dataclass(frozen=True)
class RowProblem:
    line: int
    reason: str
    text: str = ""


@dataclass(frozen=True)
class Lexicon:
    entries: tuple[IdiomEntry, ...]
    index: Mapping[str, frozenset[str]]
    problems: tuple[RowProblem, ...] = ()
    fold_taa_marbuta: bool = False
    _by_id: Mapping[str, IdiomEntry] = field(default=MappingProxyType({}), repr=False, compare=False)
    _by_surface: Mapping[str, str] = field(default=MappingProxyType({}), repr=False, compare=False)

    @classmethod
    def from_entries(cls, entries: Iterable[IdiomEntry], problems: Iterable[RowProblem] = (),
                     *, fold_taa_marbuta: bool = False) -> Lexicon:
        """Build a lexicon, dropping later entries whose id repeats an earlier one."""
        kept: list[IdiomEntry] = []
        seen: set[str] = set()
        for e in entries:
            if e.id in seen:
                continue
            seen.add(e.id)
            kept.append(e)
        index: dict[str, set[str]] = {}
        for e in kept:
            for t in e.terms:
                index.setdefault(t, set()).add(e.id)
        return cls(
            entries=tuple(kept),
            index=MappingProxyType({t: frozenset(ids) for t, ids in index.items()}),
            problems=tuple(problems),
            fold_taa_marbuta=fold_taa_marbuta,
            _by_id=MappingProxyType({e.id: e for e in kept}),
            _by_surface=MappingProxyType({e.normalized: e.id for e in kept}),
        )

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, idiom_id: str) -> IdiomEntry:
        return self._by_id[idiom_id]

    def __contains__(self, idiom_id: object) -> bool:
        return idiom_id in self._by_id

    def resolve(self, key: str) -> IdiomEntry | None:
        """Look an idiom up by id, or failing that by (normalized) surface."""
        if key in self._by_id:
            return self._by_id[key]
        found = self._by_surface.get(" ".join(tokenize(key, fold_taa_marbuta=self.fold_taa_marbuta).texts))
        return self._by_id[found] if found else None

    def candidates_for(self, terms: Iterable[str]) -> set[str]:
        """Ids of every entry sharing at least one term with ``terms``."""
        ids: set[str] = set()
        for t in set(terms):
            ids |= self.index.get(t, frozenset())
        return ids


def _decode(data: bytes) -> str:
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise LexiconError(f"malformed UTF-8 at byte {exc.start}") from exc


def load_lexicon(source: BinaryIO | bytes, format: str = "TSV", *, fold_taa_marbuta: bool = False) -> Lexicon:
    """Parse a TSV lexicon from a binary stream (or raw bytes).

    Bad rows do not abort the load; they are returned in ``Lexicon.problems``
    with their 1-based line number.  Duplicate surfaces keep the first row.
    """
    if format.upper() != "TSV":
        raise LexiconError(f"unsupported lexicon format {format!r}")
    if isinstance(source, (bytes, bytearray)):
        data = bytes(source)
    else:
        try:
            data = source.read()
        except (OSError, ValueError) as exc:
            raise LexiconError(f"cannot read lexicon: {exc}") from exc
    text = _decode(data)
    text = text.removeprefix("\ufeff")

    entries: list[IdiomEntry] = []
    problems: list[RowProblem] = []
    first_line: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        cols = raw.split("\t")
        if len(cols) != 4:
            problems.append(RowProblem(lineno, f"expected 4 tab-separated columns, got {len(cols)}", raw))
            continue
        surface, gloss, bw, pol = (c.strip() for c in cols)
        try:
            entry = IdiomEntry.create(surface, gloss, bw, pol, fold_taa_marbuta=fold_taa_marbuta)
        except LexiconError as exc:
            problems.append(RowProblem(lineno, str(exc), raw))
            continue
        if entry.id in first_line:
            problems.append(RowProblem(lineno, f"duplicate surface, first seen on line {first_line[entry.id]}", raw))
            continue
        first_line[entry.id] = lineno
        entries.append(entry)

    if not entries:
        raise LexiconError("zero valid rows")
    return Lexicon.from_entries(entries, problems, fold_taa_marbuta=fold_taa_marbuta)


def load_lexicon_file(path, *, fold_taa_marbuta: bool = False) -> Lexicon:
    with open(path, "rb") as fh:
        return load_lexicon(fh, fold_taa_marbuta=fold_taa_marbuta)


def sample_lexicon() -> Lexicon:
    """The bundled sample: the published example idioms."""
    data = resources.files("idiomlex.data").joinpath("sample_lexicon.tsv").read_bytes()
    return load_lexicon(data)


def dump_lexicon(lex: Lexicon) -> bytes:
    """Serialize back to the TSV format ``load_lexicon`` reads."""
    buf = io.StringIO()
    for e in lex.entries:
        fields = (e.surface, e.gloss, e.buckwalter, e.polarity.value)
        if any("\t" in f or "\n" in f for f in fields):
            raise LexiconError(f"entry {e.id} has a tab or newline inside a field")
        buf.write("\t".join(fields) + "\n")
    return buf.getvalue().encode("utf-8")


# -- validation ---------------------------------------------------------------

@dataclass(frozen=True)
class Issue:
    severity: str  # "error" | "warning"
    kind: str  # "token_count" | "buckwalter_mismatch" | "duplicate_surface" | "bad_row"
    message: str
    idiom_id: str | None = None
    line: int | None = None


@dataclass(frozen=True)
class ValidationReport:
    issues: tuple[Issue, ...]
    n_entries: int

    @property
    def errors(self) -> list[Issue]:
        return [i for i in self.issues if i.severity == "error"]

    @property
    def warnings(self) -> list[Issue]:
        return [i for i in self.issues if i.severity == "warning"]

    @property
    def ok(self) -> bool:
        return not self.errors

    def to_text(self) -> str:
        lines = [f"{self.n_entries} entries, {len(self.errors)} errors, {len(self.warnings)} warnings"]
        for i in self.issues:
            where = f"line {i.line}" if i.line is not None else i.idiom_id
            lines.append(f"{i.severity.upper()}\t{i.kind}\t{where}\t{i.message}")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "entries": self.n_entries,
            "errors": len(self.errors),
            "warnings": len(self.warnings),
            "issues": [
                {"severity": i.severity, "kind": i.kind, "idiom_id": i.idiom_id, "line": i.line, "message": i.message}
                for i in self.issues
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2)


def validate_lexicon(lex: Lexicon) -> ValidationReport:
    """Check token counts, Buckwalter consistency and load-time row problems.

    Token counts outside 2..6 are errors (the detector can never match such
    an entry).  A Buckwalter column that does not transliterate back to the
    surface is only a warning: source data is often inconsistent.
    """
    issues: list[Issue] = []
    for p in lex.problems:
        if p.reason.startswith("duplicate surface"):
            issues.append(Issue("warning", "duplicate_surface", p.reason, line=p.line))
        else:
            issues.append(Issue("error", "bad_row", p.reason, line=p.line))

    fold = lex.fold_taa_marbuta
    for e in lex.entries:
        n = len(e.terms)
        if not MIN_TOKENS <= n <= MAX_TOKENS:
            issues.append(Issue("error", "token_count",
                                f"{n} tokens, expected {MIN_TOKENS}..{MAX_TOKENS}", idiom_id=e.id))
        try:
            back = normalize(from_buckwalter(e.buckwalter), fold_taa_marbuta=fold)
        except TransliterationError as exc:
            issues.append(Issue("warning", "buckwalter_mismatch", str(exc), idiom_id=e.id))
            continue
        expected = normalize(e.surface, fold_taa_marbuta=fold)
        if back != expected:
            issues.append(Issue("warning", "buckwalter_mismatch",
                                f"{e.buckwalter!r} reads as {back!r}, not {expected!r}", idiom_id=e.id))
    return ValidationReport(tuple(issues), len(lex.entries))
