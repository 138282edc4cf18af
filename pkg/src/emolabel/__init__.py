"""Distant-supervision sentiment labelling of tweets.

Tweets carrying sentiment-bearing emojis are labelled first; their words are
pooled into three disjoint per-class word lists, which then label the rest of
the corpus by word coverage. No training and no external language resources.
"""

from .corpus_io import (
    SENTIMENTS,
    Corpus,
    CorpusError,
    Diagnostic,
    Sentiment,
    Tweet,
    read_corpus,
    validate_corpus,
    write_corpus,
    write_labels,
)
from .emoji_lexicon import (
    EmojiCounts,
    EmojiLexicon,
    LexiconError,
    extract_emojis,
    load_lexicon,
    normalize_emoji,
    strip_emojis,
)
from .evaluate import (
    ConfusionMatrix,
    EvalReport,
    EvaluationError,
    accuracy,
    confusion,
    macro_f1,
    report,
    weighted_combined,
)
from .pipeline import (
    CoverageMode,
    Fallback,
    LabelResult,
    LabelRun,
    PipelineConfig,
    Step,
    WordLists,
    run_pipeline,
    step1_emojis,
    step2_lists,
    step3_words,
)
from .synth import SynthConfig, generate
from .text_norm import clean, tokenize

__version__ = "0.1.0"
