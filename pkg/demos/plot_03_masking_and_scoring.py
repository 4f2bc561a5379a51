"""
Masking idioms and scoring sentiment
====================================

Idioms carry sentiment that their individual words do not.  Masking swaps
each detected idiom for a polarity placeholder so that a downstream
word-level classifier sees ``NG_Phrase`` or ``PO_Phrase`` instead of
misleading literal words.
"""

from idiomlex import detect, mask, sample_lexicon, score, unmask

lex = sample_lexicon()
text = "الي فات مات، بس بصراحة الموضوع ده نجوم السما أقرب"

matches = detect(text, lex)
doc = mask(text, matches)
print(doc.masked_text)

# The masked document remembers what it replaced, so the original comes back
# exactly.
assert unmask(doc) == text
for r in doc.replacements:
    print(r.mask, "<-", r.original)

# Each idiom counts +3 (PO) or -3 (NG); the label follows the sign.
print(score(matches))
print(score(detect("ياريتها جابت راجل", lex)))
print(score([]))

# A smaller idiom weight, and word-level scores from an external lexicon.
print(score(matches, idiom_weight=1, extra_terms=[0.5, -0.25]))
