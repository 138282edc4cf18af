"""Three-step distant-supervision labelling.

1. Tweets whose lexicon emojis have a strict majority class take that class.
2. The words of those tweets are pooled per class; any word seen in more than
   one class is discarded, leaving three disjoint word lists.
3. Every other tweet takes the class whose word list covers most of its
   tokens. Ties and zero coverage go to a configurable fallback.
"""

from __future__ import annotations

import enum
import json
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Optional, Sequence

from .corpus_io import SENTIMENTS, Corpus, Sentiment, Tweet
from .emoji_lexicon import ClassCounts, EmojiCounts, EmojiLexicon, extract_emojis, strip_emojis
from .text_norm import clean, tokenize


class Step(str, enum.Enum):
    EMOJI = "emoji"
    WORDS = "words"
    FALLBACK = "fallback"
    UNLABELLED = "unlabelled"


class Fallback(str, enum.Enum):
    NEUTRAL = "neutral"
    NONE = "none"
    MAJORITY_CLASS = "majority_class"


class CoverageMode(str, enum.Enum):
    OCCURRENCES = "occurrences"
    TYPES = "types"


@dataclass(frozen=True)
class PipelineConfig:
    fallback: Fallback = Fallback.NEUTRAL
    coverage_mode: CoverageMode = CoverageMode.OCCURRENCES

    def __post_init__(self) -> None:
        object.__setattr__(self, "fallback", Fallback(self.fallback))
        object.__setattr__(self, "coverage_mode", CoverageMode(self.coverage_mode))


@dataclass(frozen=True)
class WordLists:
    negative: frozenset[str] = frozenset()
    neutral: frozenset[str] = frozenset()
    positive: frozenset[str] = frozenset()

    def __post_init__(self) -> None:
        for name in ("negative", "neutral", "positive"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))
        if (self.negative & self.neutral) or (self.negative & self.positive) or (self.neutral & self.positive):
            raise ValueError("word lists must be pairwise disjoint")

    def of(self, sentiment: Sentiment) -> frozenset[str]:
        return getattr(self, sentiment.value)

    def lookup(self) -> dict[str, int]:
        """word -> class index in SENTIMENTS order."""
        return {w: i for i, s in enumerate(SENTIMENTS) for w in self.of(s)}

    def to_dict(self) -> dict[str, list[str]]:
        return {s.value: sorted(self.of(s)) for s in SENTIMENTS}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, indent=2) + "\n"

    def export(self, path: str | Path) -> None:
        Path(path).write_text(self.to_json(), encoding="utf-8")

    @classmethod
    def from_dict(cls, data: Mapping[str, Iterable[str]]) -> "WordLists":
        return cls(*(frozenset(data.get(s.value, ())) for s in SENTIMENTS))


@dataclass(frozen=True)
class LabelResult:
    tweet_id: str
    label: Optional[Sentiment]
    step: Step
    emoji_counts: EmojiCounts = EmojiCounts()
    coverage: ClassCounts = ClassCounts()


@dataclass(frozen=True)
class LabelRun:
    results: Mapping[str, LabelResult]
    word_lists: WordLists
    config: PipelineConfig = field(default_factory=PipelineConfig)

    def step1_ids(self) -> list[str]:
        return [i for i, r in self.results.items() if r.step is Step.EMOJI]

    def step3_ids(self) -> list[str]:
        return [i for i, r in self.results.items() if r.step is not Step.EMOJI]

    def labels(self) -> dict[str, Optional[Sentiment]]:
        return {i: r.label for i, r in self.results.items()}

    def summary(self) -> str:
        n = len(self.results)
        n1 = len(self.step1_ids())
        n3 = n - n1
        n_fb = sum(r.step is Step.FALLBACK for r in self.results.values())
        n_un = sum(r.step is Step.UNLABELLED for r in self.results.values())
        p1, p3 = step_shares(n1, n3)
        return (
            f"step1: {n1} ({p1:.1f}%), step3: {n3} ({p3:.1f}%)"
            f" [fallback: {n_fb}, unlabelled: {n_un}], total: {n}"
        )


def step_shares(n1: int, n3: int) -> tuple[float, float]:
    """Step-1 and step-3 shares in percent, one decimal."""
    total = n1 + n3
    if total == 0:
        return 0.0, 0.0
    return round(100.0 * n1 / total, 1), round(100.0 * n3 / total, 1)


def tweet_words(text: str) -> list[str]:
    """Word tokens of a tweet with every emoji removed."""
    return tokenize(clean(strip_emojis(text)))


def step1_emojis(corpus: Iterable[Tweet], lex: EmojiLexicon) -> tuple[list[LabelResult], list[Tweet]]:
    """Label tweets with a strict emoji majority; return them and the rest."""
    labelled: list[LabelResult] = []
    remaining: list[Tweet] = []
    for tweet in corpus:
        counts, _ = extract_emojis(tweet.text, lex)
        winner = counts.winner()
        if winner is None:
            remaining.append(tweet)
        else:
            labelled.append(LabelResult(tweet.id, winner, Step.EMOJI, counts))
    return labelled, remaining


def step2_lists(labelled: Iterable[tuple[Tweet, Sentiment]]) -> WordLists:
    pools: dict[Sentiment, set[str]] = {s: set() for s in SENTIMENTS}
    for tweet, sentiment in labelled:
        pools[sentiment].update(tweet_words(tweet.text))
    neg, neu, pos = (pools[s] for s in SENTIMENTS)
    return WordLists(neg - neu - pos, neu - neg - pos, pos - neg - neu)


def word_coverage(tokens: Sequence[str], lists: WordLists, mode: CoverageMode = CoverageMode.OCCURRENCES,
                  _lookup: Optional[Mapping[str, int]] = None) -> ClassCounts:
    lookup = _lookup if _lookup is not None else lists.lookup()
    if CoverageMode(mode) is CoverageMode.TYPES:
        tokens = set(tokens)
    cov = [0, 0, 0]
    for tok in tokens:
        idx = lookup.get(tok)
        if idx is not None:
            cov[idx] += 1
    return ClassCounts(*cov)


def majority_label(labels: Iterable[Sentiment]) -> Sentiment:
    """Most frequent class; ties go to neutral if it is tied, else negative before positive."""
    counts = Counter(labels)
    if not counts:
        return Sentiment.NEUTRAL
    top = max(counts.values())
    tied = [s for s in SENTIMENTS if counts.get(s, 0) == top]
    return Sentiment.NEUTRAL if Sentiment.NEUTRAL in tied else tied[0]


def step3_words(remaining: Iterable[Tweet], lists: WordLists, config: PipelineConfig = PipelineConfig(),
                majority: Optional[Sentiment] = None,
                lex: Optional[EmojiLexicon] = None) -> list[LabelResult]:
    """Label tweets by word-list coverage.

    *majority* is the class used by the ``majority_class`` fallback; it
    defaults to neutral when not supplied. *lex*, if given, is only used to
    record emoji counts in the results' diagnostics.
    """
    lookup = lists.lookup()
    fallback_label: Optional[Sentiment]
    if config.fallback is Fallback.NEUTRAL:
        fallback_label = Sentiment.NEUTRAL
    elif config.fallback is Fallback.MAJORITY_CLASS:
        fallback_label = majority or Sentiment.NEUTRAL
    else:
        fallback_label = None

    out: list[LabelResult] = []
    for tweet in remaining:
        if lex is not None:
            counts, residual = extract_emojis(tweet.text, lex)
        else:
            counts, residual = EmojiCounts(), tweet.text
        cov = word_coverage(tweet_words(residual), lists, config.coverage_mode, lookup)
        winner = cov.winner()
        if winner is not None:
            out.append(LabelResult(tweet.id, winner, Step.WORDS, counts, cov))
        elif fallback_label is not None:
            out.append(LabelResult(tweet.id, fallback_label, Step.FALLBACK, counts, cov))
        else:
            out.append(LabelResult(tweet.id, None, Step.UNLABELLED, counts, cov))
    return out


def run_pipeline(corpus: Corpus, lex: EmojiLexicon, config: PipelineConfig = PipelineConfig()) -> LabelRun:
    """Label every tweet in *corpus*. Output order follows the corpus."""
    labelled, remaining = step1_emojis(corpus, lex)
    by_id = corpus.by_id()
    lists = step2_lists((by_id[r.tweet_id], r.label) for r in labelled)
    majority = majority_label(r.label for r in labelled)
    rest = step3_words(remaining, lists, config, majority, lex)
    merged = {r.tweet_id: r for r in labelled}
    merged.update((r.tweet_id, r) for r in rest)
    results = {tid: merged[tid] for tid in corpus.ids}
    return LabelRun(results, lists, config)
