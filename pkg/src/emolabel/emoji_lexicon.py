"""Sentiment-bearing emoji sets and grapheme-level emoji counting.

Emojis are matched on a canonical codepoint form: variation selectors and
skin-tone modifiers are dropped so that the same emoji typed on different
platforms lands on the same key. ZWJ sequences are kept whole.
"""

from __future__ import annotations

import json
import os
import warnings
from dataclasses import dataclass
from pathlib import Path
from types import MappingProxyType
from typing import Mapping, NamedTuple, Optional

import regex

from .corpus_io import SENTIMENTS, Sentiment


class LexiconError(ValueError):
    pass


class EmojiCounts(NamedTuple):
    """Per-class tally, ordered negative, neutral, positive."""

    negative: int = 0
    neutral: int = 0
    positive: int = 0

    def of(self, sentiment: Sentiment) -> int:
        return self[SENTIMENTS.index(sentiment)]

    def winner(self) -> Optional[Sentiment]:
        """Class with a strictly greater count than both others, if any."""
        top = max(self)
        if top <= 0 or list(self).count(top) != 1:
            return None
        return SENTIMENTS[self.index(top)]


# Also used as the per-class word coverage tally.
ClassCounts = EmojiCounts


VARIATION_SELECTORS = frozenset({"\ufe0e", "\ufe0f"})
SKIN_TONES = frozenset(chr(c) for c in range(0x1F3FB, 0x1F400))
_DROP = VARIATION_SELECTORS | SKIN_TONES

# A grapheme cluster is treated as an emoji if it holds any of these.
EMOJI_CHAR = regex.compile(
    r"[\p{Extended_Pictographic}\p{Regional_Indicator}\p{Emoji_Modifier}\u20e3]"
)
_CLUSTER = regex.compile(r"\X")

# Stand-in indicator set. The counts follow the 12/10/12 split; the concrete
# emojis are a conservative choice and can be replaced with a lexicon file.
DEFAULT_LEXICON: Mapping[str, tuple[str, ...]] = {
    "negative": (
        "U+1F621",  # pouting face
        "U+1F620",  # angry face
        "U+1F92C",  # face with symbols on mouth
        "U+1F622",  # crying face
        "U+1F62D",  # loudly crying face
        "U+1F61E",  # disappointed face
        "U+1F614",  # pensive face
        "U+1F629",  # weary face
        "U+1F624",  # face with steam from nose
        "U+1F612",  # unamused face
        "U+1F494",  # broken heart
        "U+1F44E",  # thumbs down
    ),
    "neutral": (
        "U+1F610",  # neutral face
        "U+1F611",  # expressionless face
        "U+1F636",  # face without mouth
        "U+1F914",  # thinking face
        "U+1F928",  # face with raised eyebrow
        "U+1F62F",  # hushed face
        "U+1F62E",  # face with open mouth
        "U+1F910",  # zipper-mouth face
        "U+1F937",  # person shrugging
        "U+1F440",  # eyes
    ),
    "positive": (
        "U+1F600",  # grinning face
        "U+1F603",  # grinning face with big eyes
        "U+1F604",  # grinning face with smiling eyes
        "U+1F601",  # beaming face
        "U+1F602",  # face with tears of joy
        "U+1F60A",  # smiling face with smiling eyes
        "U+1F60D",  # smiling face with heart-eyes
        "U+1F970",  # smiling face with hearts
        "U+1F618",  # face blowing a kiss
        "U+2764 U+FE0F",  # red heart
        "U+1F44D",  # thumbs up
        "U+1F64C",  # raising hands
    ),
}

LEXICON_ENV = "EMOLABEL_LEXICON"


def normalize_emoji(seq: str) -> str:
    """Drop variation selectors and skin-tone modifiers. Idempotent."""
    return "".join(ch for ch in seq if ch not in _DROP)


def is_emoji_cluster(cluster: str) -> bool:
    return EMOJI_CHAR.search(cluster) is not None


_ESCAPE = regex.compile(r"(?i)U\+([0-9A-Fa-f]{4,6})")


def parse_entry(entry: str) -> str:
    """Decode a lexicon entry: a literal emoji or space-separated ``U+XXXX`` escapes."""
    if not isinstance(entry, str) or not entry.strip():
        raise LexiconError(f"empty or non-string lexicon entry {entry!r}")
    parts = entry.split()
    if any(p[:2].upper() == "U+" for p in parts):
        chars = []
        for p in parts:
            m = _ESCAPE.fullmatch(p)
            if m is None:
                raise LexiconError(f"malformed codepoint escape {p!r} in {entry!r}")
            cp = int(m.group(1), 16)
            if cp > 0x10FFFF or 0xD800 <= cp <= 0xDFFF:
                raise LexiconError(f"invalid codepoint {p!r} in {entry!r}")
            chars.append(chr(cp))
        return "".join(chars)
    return entry.strip()


def to_escapes(seq: str) -> str:
    return " ".join(f"U+{ord(ch):04X}" for ch in seq)


@dataclass(frozen=True)
class EmojiLexicon:
    entries: Mapping[str, Sentiment]
    source: str = "builtin"

    def __post_init__(self) -> None:
        for key in self.entries:
            if normalize_emoji(key) != key:
                raise LexiconError(f"lexicon key {to_escapes(key)} is not canonical")
        object.__setattr__(self, "entries", MappingProxyType(dict(self.entries)))

    @classmethod
    def from_classes(cls, classes: Mapping[str, list[str] | tuple[str, ...]], source: str) -> "EmojiLexicon":
        unknown = set(classes) - {s.value for s in SENTIMENTS}
        if unknown:
            raise LexiconError(f"unknown sentiment class(es): {', '.join(sorted(unknown))}")
        entries: dict[str, Sentiment] = {}
        for sentiment in SENTIMENTS:
            items = classes.get(sentiment.value, [])
            if not isinstance(items, (list, tuple)):
                raise LexiconError(f"class {sentiment.value!r} must be a list")
            if not items:
                warnings.warn(f"lexicon class {sentiment.value!r} is empty", stacklevel=3)
            for raw in items:
                key = normalize_emoji(parse_entry(raw))
                if not key:
                    raise LexiconError(f"entry {raw!r} is empty after normalization")
                prev = entries.get(key)
                if prev is not None and prev is not sentiment:
                    raise LexiconError(
                        f"emoji {to_escapes(key)} assigned to both {prev.value} and {sentiment.value}"
                    )
                entries[key] = sentiment
        return cls(entries, source)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, key: object) -> bool:
        return key in self.entries

    def sizes(self) -> dict[str, int]:
        out = {s.value: 0 for s in SENTIMENTS}
        for s in self.entries.values():
            out[s.value] += 1
        return out

    def by_class(self) -> dict[str, list[str]]:
        out: dict[str, list[str]] = {s.value: [] for s in SENTIMENTS}
        for key in sorted(self.entries):
            out[self.entries[key].value].append(key)
        return out

    def to_json(self) -> str:
        return json.dumps(self.by_class(), ensure_ascii=False, indent=2) + "\n"


def load_lexicon(path: Optional[str | os.PathLike] = None) -> EmojiLexicon:
    """Load an emoji lexicon file, or the built-in 12/10/12 set when *path* is None."""
    if path is None:
        return EmojiLexicon.from_classes(DEFAULT_LEXICON, "builtin")
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise LexiconError(f"{path}: invalid JSON ({exc.msg})") from None
    if not isinstance(data, dict):
        raise LexiconError(f"{path}: expected a JSON object keyed by sentiment")
    return EmojiLexicon.from_classes(data, str(path))


# Whitespace-delimited chunks are segmented on their own. A chunk edge is a
# grapheme break except when a space separator precedes Extend/ZWJ/SpacingMark,
# so such a leading space is pulled into the chunk.
_EMOJI_CLASS = r"\p{Extended_Pictographic}\p{Regional_Indicator}\p{Emoji_Modifier}\u20e3"
_CHUNK_HEAD = r"(?:\p{Zs}(?=[\p{GCB=Extend}\p{GCB=ZWJ}\p{GCB=SpacingMark}])|(?<!\S))"
_ANY_CHUNK = regex.compile(_CHUNK_HEAD + r"\S++")
_EMOJI_CHUNK = regex.compile(_CHUNK_HEAD + r"[^\s" + _EMOJI_CLASS + r"]*+[" + _EMOJI_CLASS + r"]\S*+")


def _clusters(text: str) -> list[str]:
    return _CLUSTER.findall(text)


def strip_emojis(text: str) -> str:
    """Remove every emoji grapheme cluster, lexicon member or not."""
    if EMOJI_CHAR.search(text) is None:
        return text
    return _EMOJI_CHUNK.sub(lambda m: "".join(c for c in _clusters(m.group()) if not is_emoji_cluster(c)), text)


def extract_emojis(text: str, lex: EmojiLexicon) -> tuple[EmojiCounts, str]:
    """Count lexicon emojis per class and return the text with all emojis removed.

    Counting is per occurrence: two identical emojis count twice.
    """
    plain = _has_plain_key(lex)
    if not plain and EMOJI_CHAR.search(text) is None:
        return EmojiCounts(), text
    counts = [0, 0, 0]
    entries = lex.entries

    def chunk(m: regex.Match) -> str:
        kept = []
        for cluster in _clusters(m.group()):
            hit = entries.get(normalize_emoji(cluster))
            if hit is not None:
                counts[_SLOT[hit]] += 1
            elif not is_emoji_cluster(cluster):
                kept.append(cluster)
        return "".join(kept)

    residual = (_ANY_CHUNK if plain else _EMOJI_CHUNK).sub(chunk, text)
    return EmojiCounts(*counts), residual


_SLOT = {s: i for i, s in enumerate(SENTIMENTS)}


def _has_plain_key(lex: EmojiLexicon) -> bool:
    # keys without any emoji character defeat the emoji-chunk fast path
    cached = lex.__dict__.get("_plain")
    if cached is None:
        cached = any(not is_emoji_cluster(k) for k in lex.entries)
        object.__setattr__(lex, "_plain", cached)
    return cached
