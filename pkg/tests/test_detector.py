import json
import random

import pytest
from conftest import TOPIC1, TOPIC2
from generators import random_lexicon, random_text
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import all_windows

from idiomlex.detector import (DetectorConfig, DetectorError, Match, Pipeline, _pair_all, detect,
                               generate_candidates, prefilter, window_count)
from idiomlex.lexicon import IdiomEntry, Lexicon, Polarity
from idiomlex.normalize import tokenize
from idiomlex.similarity import VectorMode

PIPELINES = list(Pipeline)


def cfg(pipeline=Pipeline.COMBINED, **kw):
    return DetectorConfig(pipeline=pipeline, **kw)


@pytest.mark.parametrize("n_tokens, expected", [(0, 0), (1, 0), (2, 1), (3, 3), (6, 15), (10, 35)])
def test_candidate_counts(n_tokens, expected):
    text = " ".join(f"w{i}" for i in range(n_tokens))
    cands = generate_candidates(tokenize(text))
    assert len(cands) == expected == window_count(n_tokens)
    assert sorted((c.token_start, c.token_end) for c in cands) == sorted(all_windows(n_tokens, 2, 6))


def test_candidate_text_and_spans():
    text = "حكم، قراقوش الموجود"
    cands = generate_candidates(tokenize(text))
    assert [c.text for c in cands] == ["حكم قراقوش", "قراقوش الموجود", "حكم قراقوش الموجود"]
    assert text[cands[0].char_start:cands[0].char_end] == "حكم، قراقوش"


def test_prefilter_examples(lexicon):
    cands = generate_candidates(tokenize("قراقوش الموجود حاليا"))
    kept = prefilter(cands, lexicon)
    qid = lexicon.resolve("حكم قراقوش").id
    assert [(c.text, ids) for c, ids in kept] == [("قراقوش الموجود", {qid}), ("قراقوش الموجود حاليا", {qid})]
    assert prefilter(generate_candidates(tokenize("كلام عادي جدا")), lexicon) == []


def test_prefilter_matches_brute_force(lexicon, micro_corpus):
    for doc in micro_corpus:
        cands = generate_candidates(tokenize(doc.text))
        assert prefilter(cands, lexicon) == _pair_all(cands, lexicon)


@pytest.mark.parametrize("pipeline", PIPELINES)
def test_topic1(lexicon, pipeline):
    found = {(m.text, m.surface) for m in detect(TOPIC1, lexicon, cfg(pipeline))}
    assert ("حكم قراقوش", "حكم قراقوش") in found
    # the near miss sits exactly on the edit threshold and below the cosine one
    near = ("الي ثاروا ماتوا", "الي اختشوا ماتوا")
    assert (near in found) == (pipeline is Pipeline.EDIT_ONLY)


@pytest.mark.parametrize("pipeline", PIPELINES)
def test_topic2(lexicon, pipeline):
    (m,) = detect(TOPIC2, lexicon, cfg(pipeline))
    assert m.text == "ياريتها جابت راجل"
    assert m.polarity is Polarity.NG
    assert m.cosine_score == 1.0 and m.norm_edit == 0.0


def test_near_miss_scores(lexicon):
    (m,) = detect("الي ثاروا ماتوا", lexicon, cfg(Pipeline.EDIT_ONLY))
    assert m.norm_edit == 0.25
    assert m.cosine_score == pytest.approx(2 / 3)
    assert detect("الي ثاروا ماتوا", lexicon, cfg(Pipeline.EDIT_ONLY, norm_edit_threshold=0.2)) == []


def test_repeated_idiom_found_twice(lexicon):
    text = "ياريتها جابت راجل ياريتها جابت راجل"
    ms = detect(text, lexicon)
    assert [(m.char_start, m.char_end) for m in ms] == [(0, 17), (18, 35)]


def test_detect_on_idiom_free_text(lexicon):
    assert detect("الجو النهارده حلو جدا", lexicon) == []
    assert detect("", lexicon) == []


def test_empty_lexicon_rejected():
    with pytest.raises(DetectorError, match="empty lexicon"):
        detect("حكم قراقوش", Lexicon.from_entries([]))


@pytest.mark.parametrize("kw", [dict(cosine_threshold=0), dict(cosine_threshold=1.0),
                                dict(norm_edit_threshold=-0.1), dict(min_n=1), dict(min_n=4, max_n=3)])
def test_bad_config(kw):
    with pytest.raises(DetectorError):
        DetectorConfig(**kw)


def test_exact_containment_every_entry(lexicon):
    for e in lexicon:
        text = f"قال {e.surface} وخلاص"
        ms = detect(text, lexicon)
        assert [m.idiom_id for m in ms] == [e.id]
        assert ms[0].text == e.surface
        assert ms[0].cosine_score == 1.0 and ms[0].norm_edit == 0.0


def test_char_mode_runs(lexicon):
    ms = detect(TOPIC1, lexicon, cfg(vector_mode=VectorMode.CHAR_TF))
    assert "حكم قراقوش" in {m.text for m in ms}


def test_unmatchable_entries_ignored():
    lone = IdiomEntry.create("قراقوش", "", "qrAqw$", "NG")
    lex = Lexicon.from_entries([lone])
    assert detect("حكم قراقوش", lex) == []


def test_match_json_round_trip(lexicon):
    for m in detect(TOPIC1 + " " + TOPIC2, lexicon, cfg(Pipeline.EDIT_ONLY)):
        d = json.loads(json.dumps(m.to_dict(), ensure_ascii=False))
        assert Match.from_dict(d) == m


def test_deterministic(lexicon):
    text = TOPIC1 + " " + TOPIC2
    runs = {tuple(detect(text, lexicon, cfg(p))) for p in PIPELINES for _ in range(3)}
    assert len(runs) == 3


def keys(ms):
    return {(m.idiom_id, m.token_start, m.token_end) for m in ms}


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=60, deadline=None)
def test_random_invariants(seed):
    rng = random.Random(seed)
    lex = random_lexicon(rng)
    text = random_text(rng, lex)
    c_thr, e_thr = rng.uniform(0.1, 0.9), rng.uniform(0.0, 0.5)
    out = {p: detect(text, lex, DetectorConfig(c_thr, e_thr, pipeline=p)) for p in PIPELINES}
    for ms in out.values():
        for a, b in zip(ms, ms[1:]):
            assert a.token_end <= b.token_start
        for m in ms:
            assert m.text == text[m.char_start:m.char_end]
    combined = keys(out[Pipeline.COMBINED])
    assert combined <= keys(out[Pipeline.COSINE_ONLY])
    assert combined == keys(out[Pipeline.COSINE_ONLY]) & keys(out[Pipeline.EDIT_ONLY])
    looser = DetectorConfig(c_thr * 0.8, min(1.0, e_thr + 0.1))
    assert combined <= keys(detect(text, lex, looser))
    no_index = DetectorConfig(c_thr, e_thr, prefilter=False)
    assert detect(text, lex, no_index) == out[Pipeline.COMBINED]
