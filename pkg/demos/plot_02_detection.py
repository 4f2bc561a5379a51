"""
Finding idioms in running text
==============================

Every 2 to 6 token window of the input is compared with the lexicon idioms
it shares a word with.  A window is reported when its term vector is close
to the idiom's (cosine) and its characters are close too (normalized edit
distance).
"""

from idiomlex import DetectorConfig, Pipeline, detect, sample_lexicon

lex = sample_lexicon()
text = "قلتها وأكررها المشكلة ليست في الثورة، الي ثاروا ماتوا وانما في حكم قراقوش الموجود حاليا"

for m in detect(text, lex):
    print(f"[{m.char_start}, {m.char_end}) {m.text!r} -> {m.surface} "
          f"{m.polarity.value} cosine={m.cosine_score:.3f} edit={m.norm_edit:.3f}")

# "الي ثاروا ماتوا" ("those who revolted died") differs from the idiom
# "الي اختشوا ماتوا" by a single word.  On characters alone it is close
# enough to pass the edit test, so the edit-only pipeline takes it for the
# idiom.  Its word overlap is only 2/3, which keeps it out of the default
# combined pipeline.
for p in Pipeline:
    found = [m.text for m in detect(text, lex, DetectorConfig(pipeline=p))]
    print(f"{p.value:<9} {found}")

# Thresholds are plain config fields.  Tightening either one can only remove
# matches.
strict = DetectorConfig(cosine_threshold=0.95, norm_edit_threshold=0.05)
print([m.text for m in detect(text, lex, strict)])

# Matches serialize to plain dicts.
print(detect(text, lex)[0].to_dict())
