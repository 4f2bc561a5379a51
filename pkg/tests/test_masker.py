import json
import random

import pytest
from conftest import TOPIC1
from hypothesis import given
from hypothesis import strategies as st

from idiomlex.detector import Match, Pipeline, detect
from idiomlex.lexicon import Polarity
from idiomlex.masker import (NG_MASK, PO_MASK, Label, MaskedDocument, MaskError, mask, score,
                             unmask)


def fake_match(start, end, polarity=Polarity.NG, idiom_id="idm-x"):
    return Match(idiom_id, "", polarity, 0, 2, start, end, 1.0, 0.0, Pipeline.COMBINED)


def test_literals_are_byte_exact():
    assert NG_MASK.encode("utf-8") == b"NG_Phrase"
    assert PO_MASK.encode("utf-8") == b"PO_Phrase"


def test_topic1_masked(lexicon):
    doc = mask(TOPIC1, detect(TOPIC1, lexicon))
    assert doc.masked_text == TOPIC1.replace("حكم قراقوش", "NG_Phrase")
    (r,) = doc.replacements
    assert r.original == "حكم قراقوش" and r.mask == NG_MASK
    assert doc.masked_text[r.masked_start:r.masked_start + 9] == "NG_Phrase"
    assert unmask(doc) == TOPIC1


def test_no_matches_leaves_text_unchanged():
    text = "  الجو\tحلو،  جدا \n"
    doc = mask(text, [])
    assert doc.masked_text == text and doc.replacements == ()
    assert unmask(doc) == text


def test_two_idioms_of_opposite_polarity(lexicon):
    text = "الي فات مات، بس الباب يفوت جمل"
    ms = detect(text, lexicon)
    doc = mask(text, ms)
    assert doc.masked_text == "PO_Phrase، بس NG_Phrase"
    assert str(score(ms)) == "0 NEUTRAL"


def test_overlapping_spans_rejected():
    with pytest.raises(MaskError, match="overlap"):
        mask("abcdefgh", [fake_match(0, 4), fake_match(3, 6)])


@pytest.mark.parametrize("span", [(0, 9), (-1, 2), (3, 3)])
def test_bad_spans_rejected(span):
    with pytest.raises(MaskError, match="out of bounds"):
        mask("abcdefgh", [fake_match(*span)])


def test_unmask_detects_tampering():
    doc = mask("abc def", [fake_match(0, 3)])
    tampered = MaskedDocument(doc.masked_text.replace("NG", "XX"), doc.replacements)
    with pytest.raises(MaskError):
        unmask(tampered)


def test_masked_document_json_round_trip():
    text = "one two three four"
    doc = mask(text, [fake_match(4, 7, Polarity.PO), fake_match(14, 18)])
    again = MaskedDocument.from_dict(json.loads(doc.to_json()))
    assert again == doc
    assert unmask(again) == text


@st.composite
def text_and_spans(draw):
    text = draw(st.text(alphabet="ابت ،\nxy", max_size=40))
    cuts = sorted(draw(st.lists(st.integers(0, len(text)), max_size=8, unique=True)))
    spans = [(a, b) for a, b in zip(cuts[::2], cuts[1::2]) if a < b]
    pols = draw(st.lists(st.sampled_from(list(Polarity)), min_size=len(spans), max_size=len(spans)))
    return text, [fake_match(a, b, p) for (a, b), p in zip(spans, pols)]


@given(text_and_spans())
def test_mask_round_trip_property(case):
    text, matches = case
    doc = mask(text, matches)
    assert unmask(doc) == text
    n_masks = doc.masked_text.count(NG_MASK) + doc.masked_text.count(PO_MASK)
    assert n_masks == len(matches)


def test_score_examples():
    assert str(score([Polarity.NG])) == "-3 NG"
    assert str(score([])) == "0 NEUTRAL"
    assert str(score([Polarity.PO, Polarity.NG])) == "0 NEUTRAL"
    assert str(score([Polarity.PO, Polarity.PO])) == "6 PO"
    assert str(score([Polarity.NG], idiom_weight=1)) == "-1 NG"
    assert score([Polarity.PO], extra_terms=[-0.5]).net == 2.5


@pytest.mark.parametrize("w", [0, 4, 2.0, True])
def test_bad_weight(w):
    with pytest.raises(ValueError):
        score([Polarity.NG], idiom_weight=w)


def test_bad_extra_term():
    with pytest.raises(ValueError):
        score([], extra_terms=[1.5])


def test_score_from_matches(lexicon):
    s = score(detect(TOPIC1, lexicon))
    assert s.net == -3 and s.label is Label.NG
    assert s.to_dict() == {"net": -3, "label": "NG"}


pols = st.lists(st.sampled_from(list(Polarity)), max_size=20)


@given(pols, st.integers(1, 3))
def test_score_antisymmetric(ps, w):
    assert score([p.flipped for p in ps], w).net == -score(ps, w).net


@given(pols, st.randoms())
def test_score_permutation_invariant(ps, rnd):
    shuffled = list(ps)
    rnd.shuffle(shuffled)
    assert score(shuffled) == score(ps)


@given(pols, pols)
def test_score_additive(a, b):
    assert score(a + b).net == score(a).net + score(b).net


def test_score_label_follows_sign():
    rng = random.Random(7)
    for _ in range(200):
        ps = [rng.choice(list(Polarity)) for _ in range(rng.randint(0, 9))]
        s = score(ps)
        assert s.label is (Label.PO if s.net > 0 else Label.NG if s.net < 0 else Label.NEUTRAL)
