"""
Loading and checking an idiom lexicon
=====================================

A lexicon is a UTF-8 TSV file with four columns: the idiom as written, a
short gloss, its Buckwalter transliteration and its polarity (PO or NG).
"""

from idiomlex import from_buckwalter, load_lexicon, sample_lexicon, to_buckwalter, validate_lexicon

# The package ships a small sample lexicon.
lex = sample_lexicon()
print(len(lex), "idioms")
for entry in lex:
    print(f"  {entry.polarity.value}  {entry.surface:<28} {entry.buckwalter}")

# Each entry is indexed by its normalized tokens, which is what the detector
# uses to find candidate idioms quickly.
print(sorted(lex.index["الي"]))

# Buckwalter is a one-to-one ASCII rendering of Arabic script.
bw = to_buckwalter("حكم قراقوش")
print(bw, "->", from_buckwalter(bw))

# Your own lexicon: rows that cannot be parsed are kept as problems instead
# of aborting the load, and the validator reports them with everything else.
tsv = "\n".join([
    "حكم قراقوش\tarbitrary rule\tHkm qrAqw$\tNG",
    "قراقوش\ta single word\tqrAqw$\tNG",
    "الي فات مات\tlet bygones be bygones\tAly fAt mAAt\tPO",
    "broken row",
]).encode("utf-8")
mine = load_lexicon(tsv)
print(validate_lexicon(mine).to_text())
