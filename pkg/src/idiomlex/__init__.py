"""Detect Arabic idioms and proverbs, mask them by polarity, and score text."""
from .buckwalter import TransliterationError, from_buckwalter, to_buckwalter
from .detector import (CandidatePhrase, DetectorConfig, DetectorError, Match, Pipeline, ScoredCandidate,
                       detect, generate_candidates, prefilter)
from .evaluation import (EvalReport, GoldDocument, GoldSpan, bundled_corpus, cohen_kappa, evaluate,
                         read_gold_jsonl)
from .lexicon import (IdiomEntry, Lexicon, LexiconError, Polarity, ValidationReport, dump_lexicon,
                      load_lexicon, load_lexicon_file, sample_lexicon, validate_lexicon)
from .masker import NG_MASK, PO_MASK, MaskedDocument, SentimentScore, mask, score, unmask
from .normalize import Token, TokenizedText, normalize, tokenize
from .similarity import (TermVector, VectorMode, cosine, edit_distance_table, levenshtein,
                         normalized_levenshtein, vectorize)

__version__ = "0.1.0"
