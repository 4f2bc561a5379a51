"""
Comparing the three pipelines
=============================

The bundled micro-corpus has 30 short documents: ten contain an idiom
verbatim, ten contain a near miss that changes one word of an idiom, and
ten contain no idiom.  Near misses are built to fool one measure at a time.
"""

import json
from importlib import resources

from idiomlex import bundled_corpus, cohen_kappa, evaluate, sample_lexicon
from idiomlex.lexicon import Polarity

lex = sample_lexicon()
corpus = bundled_corpus("micro", lex)
print(evaluate(corpus, lex).to_text())

# The near misses: the first five are close on characters, the last five share
# most of their words with an idiom.
raw = resources.files("idiomlex.data").joinpath("micro_corpus.jsonl").read_text("utf-8")
for line in raw.splitlines():
    d = json.loads(line)
    if d["kind"].startswith("near_miss"):
        print(d["kind"], d["text"])

# Agreement between two annotators' polarity labels.
a = [Polarity.NG, Polarity.NG, Polarity.PO, Polarity.NG, Polarity.PO, Polarity.NG]
b = [Polarity.NG, Polarity.PO, Polarity.PO, Polarity.NG, Polarity.PO, Polarity.NG]
print(f"kappa = {cohen_kappa(a, b):.3f}")
