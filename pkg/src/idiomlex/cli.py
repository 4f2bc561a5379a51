"""Command line front end.

    idiomlex detect   --lexicon L [INPUT]      matches per line (or --document)
    idiomlex mask     --lexicon L [INPUT]      text with NG_Phrase / PO_Phrase
    idiomlex score    --lexicon L [INPUT]      net score and label
    idiomlex eval     --lexicon L GOLD.jsonl   three-pipeline comparison
    idiomlex validate LEXICON                  lexicon checks
    idiomlex translit [TEXT] [--reverse]       Buckwalter transliteration

INPUT defaults to standard input.  ``--lexicon @sample`` uses the bundled
sample lexicon.  Exit status: 0 ok, 1 runtime or data error, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .buckwalter import TransliterationError, from_buckwalter, to_buckwalter
from .detector import DetectorConfig, DetectorError, Pipeline, detect
from .evaluation import EvalError, evaluate, read_gold_jsonl
from .lexicon import LexiconError, load_lexicon_file, sample_lexicon, validate_lexicon
from .masker import mask, score
from .similarity import VectorMode

RUNTIME_ERRORS = (OSError, UnicodeDecodeError, LexiconError, DetectorError, EvalError,
                  TransliterationError, ValueError)


def _detector_flags() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--lexicon", required=True, metavar="PATH", help="lexicon TSV, or @sample")
    p.add_argument("--pipeline", choices=[x.value for x in Pipeline], default=Pipeline.COMBINED.value)
    p.add_argument("--cosine-threshold", type=float, default=DetectorConfig.cosine_threshold)
    p.add_argument("--edit-threshold", type=float, default=DetectorConfig.norm_edit_threshold)
    p.add_argument("--vector-mode", choices=[x.value for x in VectorMode], default=VectorMode.WORD_TF.value)
    p.add_argument("--format", choices=["json", "tsv", "text"], default="text")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="idiomlex", description="Arabic idiom/proverb detection and masking.")
    sub = parser.add_subparsers(dest="command", required=True)
    flags = _detector_flags()

    for name, helptext in (("detect", "list idiom matches"), ("mask", "replace idioms with polarity masks"),
                           ("score", "net sentiment from idiom masks")):
        p = sub.add_parser(name, parents=[flags], help=helptext)
        p.add_argument("input", nargs="?", default="-", help="input file, - for standard input")
        p.add_argument("--document", action="store_true", help="treat the whole input as one document")
        if name == "score":
            p.add_argument("--idiom-weight", type=int, default=3, choices=[1, 2, 3])

    p = sub.add_parser("eval", parents=[flags], help="compare the three pipelines on a gold JSONL corpus")
    p.add_argument("gold", help="gold corpus, one JSON document per line")

    p = sub.add_parser("validate", help="check a lexicon file")
    p.add_argument("lexicon", help="lexicon TSV, or @sample")
    p.add_argument("--format", choices=["json", "text"], default="text")

    p = sub.add_parser("translit", help="Arabic to Buckwalter (or back with --reverse)")
    p.add_argument("text", nargs="?", help="text to convert; standard input when omitted")
    p.add_argument("--reverse", action="store_true", help="Buckwalter to Arabic")
    return parser


def _read_text(path: str) -> str:
    data = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    return data.decode("utf-8")


def _lexicon(path: str):
    return sample_lexicon() if path == "@sample" else load_lexicon_file(path)


def _config(args) -> DetectorConfig:
    return DetectorConfig(cosine_threshold=args.cosine_threshold, norm_edit_threshold=args.edit_threshold,
                          vector_mode=VectorMode(args.vector_mode), pipeline=Pipeline(args.pipeline))


def _units(args) -> list[tuple[int | None, str]]:
    text = _read_text(args.input)
    if args.document:
        return [(None, text)]
    return list(enumerate(text.splitlines(), 1))


def _dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, sort_keys=True)


def _with_line(line, record: dict) -> dict:
    return record if line is None else {"line": line, **record}


def cmd_detect(args, out) -> int:
    lex, config = _lexicon(args.lexicon), _config(args)
    for line, text in _units(args):
        for m in detect(text, lex, config):
            if args.format == "json":
                out.write(_dumps(_with_line(line, m.to_dict())) + "\n")
            elif args.format == "tsv":
                out.write("\t".join(map(str, (line or 0, m.char_start, m.char_end, m.idiom_id, m.polarity.value,
                                              f"{m.cosine_score:.4f}", f"{m.norm_edit:.4f}", m.text))) + "\n")
            else:
                where = f"line {line}: " if line is not None else ""
                out.write(f"{where}[{m.char_start},{m.char_end}) {m.polarity.value} {m.text} -> {m.surface} "
                          f"(cosine={m.cosine_score:.3f}, edit={m.norm_edit:.3f})\n")
    return 0


def cmd_mask(args, out) -> int:
    lex, config = _lexicon(args.lexicon), _config(args)
    for line, text in _units(args):
        doc = mask(text, detect(text, lex, config))
        if args.format == "json":
            out.write(_dumps(_with_line(line, doc.to_dict())) + "\n")
        elif args.format == "tsv":
            out.write(f"{line or 0}\t{doc.masked_text}\n")
        else:
            out.write(doc.masked_text + ("\n" if line is not None or not doc.masked_text.endswith("\n") else ""))
    return 0


def cmd_score(args, out) -> int:
    lex, config = _lexicon(args.lexicon), _config(args)
    for line, text in _units(args):
        s = score(detect(text, lex, config), idiom_weight=args.idiom_weight)
        if args.format == "json":
            out.write(_dumps(_with_line(line, s.to_dict())) + "\n")
        elif args.format == "tsv":
            d = s.to_dict()
            out.write(f"{line or 0}\t{d['net']}\t{d['label']}\n")
        else:
            out.write(f"{s}\n")
    return 0


def cmd_eval(args, out) -> int:
    lex, config = _lexicon(args.lexicon), _config(args)
    with open(args.gold, encoding="utf-8") as fh:
        corpus = read_gold_jsonl(fh, lex)
    report = evaluate(corpus, lex, config)
    if args.format == "json":
        out.write(report.to_json() + "\n")
    elif args.format == "tsv":
        for r in report.results.values():
            d = r.to_dict()
            out.write("\t".join(str(d[k]) for k in d) + "\n")
    else:
        out.write(report.to_text() + "\n")
    return 0


def cmd_validate(args, out) -> int:
    report = validate_lexicon(_lexicon(args.lexicon))
    out.write((report.to_json() if args.format == "json" else report.to_text()) + "\n")
    return 0 if report.ok else 1


def cmd_translit(args, out) -> int:
    text = args.text if args.text is not None else _read_text("-")
    convert = from_buckwalter if args.reverse else to_buckwalter
    lines = text.splitlines() or [""]
    for line in lines:
        out.write(convert(line) + "\n")
    return 0


COMMANDS = {"detect": cmd_detect, "mask": cmd_mask, "score": cmd_score, "eval": cmd_eval,
            "validate": cmd_validate, "translit": cmd_translit}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    if hasattr(out, "reconfigure"):
        out.reconfigure(encoding="utf-8")
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return COMMANDS[args.command](args, out)
    except RUNTIME_ERRORS as exc:
        print(f"idiomlex {args.command}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
