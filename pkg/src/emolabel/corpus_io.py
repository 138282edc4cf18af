"""Tweet corpora: core record types, JSONL/CSV ingest and labelled output."""

from __future__ import annotations

import csv
import enum
import json
import unicodedata
from dataclasses import dataclass, field
from pathlib import Path
from typing import TYPE_CHECKING, Iterable, Iterator, Optional, Sequence

if TYPE_CHECKING:
    from .pipeline import LabelRun


class CorpusError(ValueError):
    """Raised for unreadable, malformed or inconsistent corpus input."""


class Sentiment(str, enum.Enum):
    NEGATIVE = "negative"
    NEUTRAL = "neutral"
    POSITIVE = "positive"

    @classmethod
    def parse(cls, value: str) -> "Sentiment":
        try:
            return cls(value.strip().lower())
        except ValueError:
            raise ValueError(f"unknown sentiment {value!r}") from None

    def __str__(self) -> str:
        return self.value


# Fixed serialization order; carries no semantic ranking.
SENTIMENTS: tuple[Sentiment, ...] = (Sentiment.NEGATIVE, Sentiment.NEUTRAL, Sentiment.POSITIVE)


@dataclass(frozen=True)
class Tweet:
    id: str
    text: str
    lang: Optional[str] = None
    gold: Optional[Sentiment] = None
    # set when the incoming text was not already NFC
    nfc_fixed: bool = field(default=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        if not isinstance(self.id, str) or not self.id:
            raise ValueError("tweet id must be a non-empty string")
        if not isinstance(self.text, str):
            raise ValueError(f"tweet {self.id}: text must be a string")
        normalized = unicodedata.normalize("NFC", self.text)
        if normalized != self.text:
            object.__setattr__(self, "text", normalized)
            object.__setattr__(self, "nfc_fixed", True)
        if not normalized.strip():
            raise ValueError(f"tweet {self.id}: empty text")


@dataclass(frozen=True)
class Corpus:
    tweets: tuple[Tweet, ...]
    name: str = "corpus"

    def __post_init__(self) -> None:
        object.__setattr__(self, "tweets", tuple(self.tweets))
        seen: set[str] = set()
        dupes: list[str] = []
        for tweet in self.tweets:
            if tweet.id in seen:
                dupes.append(tweet.id)
            seen.add(tweet.id)
        if dupes:
            raise CorpusError(f"duplicate tweet ids: {', '.join(sorted(set(dupes)))}")

    def __len__(self) -> int:
        return len(self.tweets)

    def __iter__(self) -> Iterator[Tweet]:
        return iter(self.tweets)

    def __getitem__(self, index: int) -> Tweet:
        return self.tweets[index]

    @property
    def ids(self) -> list[str]:
        return [t.id for t in self.tweets]

    def by_id(self) -> dict[str, Tweet]:
        return {t.id: t for t in self.tweets}

    def reordered(self, order: Sequence[int]) -> "Corpus":
        return Corpus(tuple(self.tweets[i] for i in order), self.name)


def _make_tweet(record: dict, where: str) -> Tweet:
    for key in ("id", "text"):
        if key not in record or record[key] is None:
            raise CorpusError(f"{where}: missing field '{key}'")
    tid = record["id"]
    if isinstance(tid, int) and not isinstance(tid, bool):
        tid = str(tid)
    if not isinstance(tid, str) or not tid:
        raise CorpusError(f"{where}: field 'id' must be a non-empty string")
    text = record["text"]
    if not isinstance(text, str) or not unicodedata.normalize("NFC", text).strip():
        raise CorpusError(f"{where}: field 'text' must be a non-empty string")
    lang = record.get("lang") or None
    if lang is not None and not isinstance(lang, str):
        raise CorpusError(f"{where}: field 'lang' must be a string")
    gold = record.get("gold")
    if gold in (None, ""):
        gold = None
    else:
        if not isinstance(gold, str):
            raise CorpusError(f"{where}: field 'gold' must be a string")
        try:
            gold = Sentiment.parse(gold)
        except ValueError:
            raise CorpusError(f"{where}: field 'gold' has unknown label {gold!r}") from None
    return Tweet(tid, text, lang, gold)


def _iter_jsonl(path: Path) -> Iterator[Tweet]:
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            where = f"{path}:{lineno}"
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CorpusError(f"{where}: invalid JSON ({exc.msg})") from None
            if not isinstance(record, dict):
                raise CorpusError(f"{where}: record must be a JSON object")
            yield _make_tweet(record, where)


def _iter_csv(path: Path) -> Iterator[Tweet]:
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            return
        header = [h.strip() for h in reader.fieldnames]
        for needed in ("id", "text"):
            if needed not in header:
                raise CorpusError(f"{path}:1: header lacks column '{needed}'")
        reader.fieldnames = header
        for row in reader:
            # line_num is the physical line after the record (handles quoted newlines)
            where = f"{path}:{reader.line_num}"
            if None in row:
                raise CorpusError(f"{where}: too many fields")
            yield _make_tweet(row, where)


def read_corpus(path: str | Path, format: str = "jsonl", name: Optional[str] = None) -> Corpus:
    """Parse a JSONL or CSV tweet file into a :class:`Corpus`.

    Text is NFC-normalized on the way in. Gold labels are optional.
    """
    path = Path(path)
    if format == "jsonl":
        tweets = list(_iter_jsonl(path))
    elif format == "csv":
        tweets = list(_iter_csv(path))
    else:
        raise CorpusError(f"unsupported format {format!r}")
    if not tweets:
        raise CorpusError("empty corpus")
    return Corpus(tuple(tweets), name or path.stem)


def _counts_dict(counts) -> dict[str, int]:
    return {s.value: int(counts[i]) for i, s in enumerate(SENTIMENTS)}


def tweet_record(tweet: Tweet) -> dict:
    rec: dict = {"id": tweet.id, "text": tweet.text}
    if tweet.lang is not None:
        rec["lang"] = tweet.lang
    if tweet.gold is not None:
        rec["gold"] = tweet.gold.value
    return rec


def label_records(corpus: Corpus, run: "LabelRun") -> Iterator[dict]:
    missing = [t.id for t in corpus if t.id not in run.results]
    if missing:
        raise CorpusError(f"label run is missing tweet ids: {', '.join(missing)}")
    for tweet in corpus:
        res = run.results[tweet.id]
        rec = tweet_record(tweet)
        rec["label"] = res.label.value if res.label is not None else None
        rec["step"] = res.step.value
        rec["diagnostics"] = {
            "emoji": _counts_dict(res.emoji_counts),
            "coverage": _counts_dict(res.coverage),
        }
        yield rec


def write_labels(corpus: Corpus, run: "LabelRun", path: str | Path) -> None:
    """Write one JSON line per tweet, in corpus order, with label and step provenance."""
    lines = [json.dumps(rec, ensure_ascii=False) + "\n" for rec in label_records(corpus, run)]
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.writelines(lines)


def write_corpus(tweets: Iterable[Tweet], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for t in tweets:
            fh.write(json.dumps(tweet_record(t), ensure_ascii=False) + "\n")


@dataclass(frozen=True)
class Diagnostic:
    tweet_id: str
    kind: str  # "empty_after_cleaning" | "missing_gold" | "nfc_normalized"
    message: str


def validate_corpus(corpus: Corpus, require_gold: bool = False) -> list[Diagnostic]:
    """Collect non-fatal warnings about a corpus. Never raises."""
    from .emoji_lexicon import strip_emojis
    from .text_norm import clean, tokenize

    out: list[Diagnostic] = []
    for t in corpus:
        if t.nfc_fixed:
            out.append(Diagnostic(t.id, "nfc_normalized", "text was not NFC; normalized at ingest"))
        if not tokenize(clean(strip_emojis(t.text))):
            out.append(Diagnostic(t.id, "empty_after_cleaning", "empty after cleaning"))
        if require_gold and t.gold is None:
            out.append(Diagnostic(t.id, "missing_gold", "no gold label"))
    return out
