import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from idiomlex import bundled_corpus, sample_lexicon  # noqa: E402

TOPIC1 = "قلتها وأكررها المشكلة ليست في الثورة، الي ثاروا ماتوا وانما في حكم قراقوش الموجود حاليا"
# The Arabic rendering of topic 2 printed alongside its transliteration and
# translation: a single occurrence of the idiom, flanked by the noise windows.
TOPIC2 = ("انا مبكر هس حد قد ابو تريكة كلاعب لكن هو محترم طبعاً في موافقه ميدو الزملاوي مش عاجبه "
          "تريكة انا زملاويه ويقولك ياريتها جابت راجل ياكوتش")

ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


@pytest.fixture(scope="session")
def lexicon():
    return sample_lexicon()


@pytest.fixture(scope="session")
def micro_corpus(lexicon):
    return bundled_corpus("micro", lexicon)


@pytest.fixture
def topic1():
    return TOPIC1


@pytest.fixture
def topic2():
    return TOPIC2


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else ""))
