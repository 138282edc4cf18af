"""Tweet cleaning and language-independent word tokenization."""

from __future__ import annotations

import unicodedata

import regex

from .emoji_lexicon import EMOJI_CHAR

_URL = regex.compile(r"(?i)\bhttps?://\S*")
_MENTION = regex.compile(r"(?<!\w)@\w+")
_HASH = regex.compile(r"(?<!\w)#(?=\w)")
_RT = regex.compile(r"^\s*RT\b:?")
_SPACE = regex.compile(r"\s+")

# Splits at Unicode default word boundaries (UAX #29).
_WORD_BOUNDARY = regex.compile(r"(?V1w)\b")
_HAS_ALNUM = regex.compile(r"[\p{L}\p{N}]")


def clean(text: str) -> str:
    """Drop URLs, @mentions, a leading RT marker and the '#' of hashtags."""
    text = _RT.sub(" ", text)
    text = _URL.sub(" ", text)
    text = _MENTION.sub(" ", text)
    text = _HASH.sub("", text)
    return _SPACE.sub(" ", text).strip()


def tokenize(text: str) -> list[str]:
    """Case-folded word tokens of *text*.

    Segments that hold no letter or digit, or that hold an emoji, are dropped.
    Diacritics are kept.
    """
    out = []
    emoji = EMOJI_CHAR.search(text) is not None
    for seg in _WORD_BOUNDARY.split(text):
        if not seg or _HAS_ALNUM.search(seg) is None or (emoji and EMOJI_CHAR.search(seg)):
            continue
        out.append(unicodedata.normalize("NFC", seg.casefold()))
    return out
