"""Synthetic gold-labelled tweet corpora with planted emoji and word signal.

Class vocabularies are disjoint synthetic tokens (``posw_017``), so recovery
of the planted classes can be checked exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .corpus_io import SENTIMENTS, Corpus, Sentiment, Tweet
from .emoji_lexicon import DEFAULT_LEXICON, parse_entry

# Gold class counts (negative, neutral, positive) of the 7,000-tweet
# monolingual SAfriSenti subsets; handy as priors.
SAFRISENTI_CLASS_COUNTS: dict[str, tuple[int, int, int]] = {
    "english": (3448, 1500, 2052),
    "sepedi": (2270, 1230, 3500),
    "setswana": (2180, 1590, 3230),
}

_PREFIX = {Sentiment.NEGATIVE: "negw", Sentiment.NEUTRAL: "neuw", Sentiment.POSITIVE: "posw"}
_SHARED_PREFIX = "shw"


def priors_for(language: str) -> tuple[float, float, float]:
    counts = SAFRISENTI_CLASS_COUNTS[language.lower()]
    total = sum(counts)
    return tuple(c / total for c in counts)  # type: ignore[return-value]


@dataclass(frozen=True)
class SynthConfig:
    n_tweets: int = 1000
    # negative, neutral, positive; a mapping keyed by class name is also accepted
    class_priors: Sequence[float] | Mapping = (1 / 3, 1 / 3, 1 / 3)
    emoji_density: float = 0.6
    vocab_per_class: int = 200
    shared_vocab: int = 50
    noise: float = 0.0
    seed: int = 0
    min_tokens: int = 8
    max_tokens: int = 22
    # chance that a non-noise token comes from the class vocabulary
    class_word_rate: float = 0.4
    lang: str = "synthetic"

    def __post_init__(self) -> None:
        priors = self.class_priors
        if isinstance(priors, Mapping):
            priors = tuple(float(priors.get(s, priors.get(s.value, 0.0))) for s in SENTIMENTS)
        priors = tuple(float(p) for p in priors)
        object.__setattr__(self, "class_priors", priors)
        if len(priors) != 3:
            raise ValueError("class_priors needs exactly three values")
        if any(not 0.0 <= p <= 1.0 for p in priors) or abs(sum(priors) - 1.0) > 1e-9:
            raise ValueError(f"class_priors must be fractions summing to 1, got {priors}")
        for name in ("emoji_density", "noise", "class_word_rate"):
            v = getattr(self, name)
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {v}")
        if self.n_tweets <= 0:
            raise ValueError("n_tweets must be positive")
        if self.vocab_per_class < 0 or self.shared_vocab < 0:
            raise ValueError("vocabulary sizes must be non-negative")
        if not 0 <= self.min_tokens <= self.max_tokens:
            raise ValueError("need 0 <= min_tokens <= max_tokens")
        if self.vocab_per_class == 0 and self.emoji_density < 1.0:
            raise ValueError("vocab_per_class=0 with emoji_density<1 leaves tweets without any class signal")


def class_vocabulary(sentiment: Sentiment, size: int) -> list[str]:
    return [f"{_PREFIX[sentiment]}_{i:03d}" for i in range(size)]


def shared_vocabulary(size: int) -> list[str]:
    return [f"{_SHARED_PREFIX}_{i:03d}" for i in range(size)]


def _class_emojis() -> dict[Sentiment, list[str]]:
    return {s: [parse_entry(e) for e in DEFAULT_LEXICON[s.value]] for s in SENTIMENTS}


def _insert(rng: np.random.Generator, tokens: list[str], extra: list[str]) -> None:
    for item in extra:
        tokens.insert(int(rng.integers(len(tokens) + 1)), item)


def generate(config: SynthConfig) -> Corpus:
    """Draw a corpus. Identical configs (including seed) give identical corpora."""
    rng = np.random.default_rng(config.seed)
    vocab = {s: class_vocabulary(s, config.vocab_per_class) for s in SENTIMENTS}
    shared = shared_vocabulary(config.shared_vocab)
    emojis = _class_emojis()
    priors = np.asarray(config.class_priors)
    width = len(str(config.n_tweets))

    tweets = []
    for i in range(config.n_tweets):
        cls = SENTIMENTS[int(rng.choice(3, p=priors))]
        length = int(rng.integers(config.min_tokens, config.max_tokens + 1))
        own = vocab[cls]

        tokens: list[str] = []
        if own:
            from_class = rng.random(length) < config.class_word_rate if shared else np.ones(length, bool)
            if length and not from_class.any():
                from_class[int(rng.integers(length))] = True
            for pick_class in from_class:
                pool = own if pick_class else shared
                tokens.append(pool[int(rng.integers(len(pool)))])
            if not tokens:
                tokens.append(own[int(rng.integers(len(own)))])
        elif shared:
            tokens = [shared[int(rng.integers(len(shared)))] for _ in range(length)]

        if own and rng.random() < config.noise:
            others = [s for s in SENTIMENTS if s is not cls]
            other = others[int(rng.integers(2))]
            k = int(rng.integers(1, 3))
            _insert(rng, tokens, [vocab[other][int(rng.integers(len(own)))] for _ in range(k)])

        if rng.random() < config.emoji_density:
            m = int(rng.integers(1, 4))
            pool = emojis[cls]
            _insert(rng, tokens, [pool[int(rng.integers(len(pool)))] for _ in range(m)])

        tweets.append(Tweet(f"syn-{i:0{width}d}", " ".join(tokens), config.lang, cls))
    return Corpus(tuple(tweets), f"synthetic-{config.seed}")
