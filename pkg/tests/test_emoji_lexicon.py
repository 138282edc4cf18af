import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from emolabel import EmojiCounts, EmojiLexicon, LexiconError, Sentiment, extract_emojis, load_lexicon, normalize_emoji
from emolabel.emoji_lexicon import parse_entry, strip_emojis

POS, NEU, NEG = Sentiment.POSITIVE, Sentiment.NEUTRAL, Sentiment.NEGATIVE


def test_default_sizes(lex):
    assert lex.sizes() == {"negative": 12, "neutral": 10, "positive": 12}
    assert lex.source == "builtin"


def test_default_keys_canonical(lex):
    assert all(normalize_emoji(k) == k for k in lex.entries)


@pytest.mark.parametrize(
    "seq, expected",
    [
        ("\U0001F44D\U0001F3FE", "\U0001F44D"),
        ("❤️", "❤"),
        ("\U0001F600", "\U0001F600"),
        ("\U0001F469‍\U0001F4BB", "\U0001F469‍\U0001F4BB"),
        ("\U0001F937\U0001F3FD‍♀️", "\U0001F937‍♀"),
    ],
)
def test_normalize_emoji(seq, expected):
    assert normalize_emoji(seq) == expected


@given(st.text(alphabet=st.sampled_from("a‍︎️\U0001F3FB\U0001F3FF\U0001F44D❤ ")))
def test_normalize_idempotent(s):
    assert normalize_emoji(normalize_emoji(s)) == normalize_emoji(s)


def _write(tmp_path, data):
    p = tmp_path / "lex.json"
    p.write_text(json.dumps(data, ensure_ascii=False), encoding="utf-8")
    return p


def test_duplicate_across_classes(tmp_path):
    p = _write(tmp_path, {"positive": ["U+1F600"], "negative": ["\U0001F600"], "neutral": ["U+1F610"]})
    with pytest.raises(LexiconError, match="both"):
        load_lexicon(p)


def test_skin_tone_key_canonicalized(tmp_path):
    p = _write(tmp_path, {"positive": ["U+1F44D U+1F3FE"], "negative": ["U+1F44E"], "neutral": ["U+1F610"]})
    lex = load_lexicon(p)
    assert lex.entries == {"\U0001F44D": POS, "\U0001F44E": NEG, "\U0001F610": NEU}
    assert lex.source == str(p)


def test_variation_duplicates_within_class_merge(tmp_path):
    p = _write(tmp_path, {"positive": ["❤️", "U+2764"], "negative": ["U+1F44E"], "neutral": ["U+1F610"]})
    assert load_lexicon(p).sizes() == {"negative": 1, "neutral": 1, "positive": 1}


@pytest.mark.parametrize("bad", ["U+ZZZZ", "U+1F600 x", "U+110000", "U+D800"])
def test_malformed_escape(tmp_path, bad):
    p = _write(tmp_path, {"positive": [bad], "negative": ["U+1F621"], "neutral": ["U+1F610"]})
    with pytest.raises(LexiconError):
        load_lexicon(p)


def test_empty_class_warns(tmp_path):
    p = _write(tmp_path, {"positive": ["U+1F600"], "negative": ["U+1F621"], "neutral": []})
    with pytest.warns(UserWarning, match="neutral"):
        lex = load_lexicon(p)
    assert lex.sizes()["neutral"] == 0


def test_unknown_class(tmp_path):
    with pytest.raises(LexiconError, match="happy"):
        load_lexicon(_write(tmp_path, {"happy": ["U+1F600"]}))


def test_invalid_json(tmp_path):
    p = tmp_path / "lex.json"
    p.write_text("{nope", encoding="utf-8")
    with pytest.raises(LexiconError):
        load_lexicon(p)


def test_non_canonical_key_rejected():
    with pytest.raises(LexiconError):
        EmojiLexicon({"❤️": POS})


def test_export_roundtrip(tmp_path, lex):
    p = tmp_path / "out.json"
    p.write_text(lex.to_json(), encoding="utf-8")
    assert load_lexicon(p).entries == lex.entries


def test_parse_entry_literal_and_escape():
    assert parse_entry("U+1F600") == parse_entry("\U0001F600") == "\U0001F600"
    assert parse_entry("u+2764 u+fe0f") == "❤️"


SMALL = EmojiLexicon({"\U0001F600": POS, "\U0001F621": NEG})


def test_extract_counts_occurrences():
    counts, residual = extract_emojis("great \U0001F600\U0001F600\U0001F621", SMALL)
    assert counts == EmojiCounts(negative=1, neutral=0, positive=2)
    assert residual == "great "


def test_extract_no_emojis():
    assert extract_emojis("no emojis here", SMALL) == (EmojiCounts(0, 0, 0), "no emojis here")


def test_extract_skin_tone():
    lex = EmojiLexicon({"\U0001F44D": POS})
    assert extract_emojis("\U0001F44D\U0001F3FE!", lex) == (EmojiCounts(positive=1), "!")


def test_non_lexicon_emoji_stripped_not_counted():
    counts, residual = extract_emojis("hi \U0001F680 \U0001F1FF\U0001F1E6 1️⃣", SMALL)
    assert counts == EmojiCounts()
    assert residual == "hi   "


def test_zwj_sequence_is_one_cluster():
    family = "\U0001F468‍\U0001F469‍\U0001F467"
    lex = EmojiLexicon({family: POS, "\U0001F468": NEG})
    assert extract_emojis(f"a{family}b", lex) == (EmojiCounts(positive=1), "ab")


def test_plain_character_key():
    # a key with no emoji codepoint must still be found
    lex = EmojiLexicon({"☺": POS, "x": NEG})
    assert extract_emojis("ax ☺️", lex) == (EmojiCounts(negative=1, positive=1), "a ")


def test_winner():
    assert EmojiCounts(1, 0, 2).winner() is POS
    assert EmojiCounts(1, 0, 1).winner() is None
    assert EmojiCounts(0, 0, 0).winner() is None


_ALPHABET = list("ab ́\n!'") + [
    "\U0001F600", "\U0001F621", "\U0001F610", "\U0001F44D", "\U0001F3FE", "️", "‍",
    "❤", "\U0001F680", "\U0001F1FF", "\U0001F1E6", "⃣", "1", "ऀ", "ः",
]


@settings(max_examples=400)
@given(st.lists(st.sampled_from(_ALPHABET), max_size=30).map("".join))
def test_extract_matches_full_text_segmentation(text):
    lex = load_lexicon()
    counts, residual = extract_emojis(text, lex)
    ref_counts, ref_residual = oracles.extract(text, {k: v.value for k, v in lex.entries.items()})
    assert list(counts) == ref_counts
    assert residual == ref_residual
    assert strip_emojis(text) == ref_residual


@settings(max_examples=200)
@given(st.lists(st.sampled_from(_ALPHABET), max_size=25).map("".join), st.randoms(use_true_random=False))
def test_counts_invariant_under_cluster_permutation(text, rnd):
    from uniseg.graphemecluster import grapheme_clusters

    lex = load_lexicon()
    clusters = list(grapheme_clusters(text))
    rnd.shuffle(clusters)
    shuffled = "".join(clusters)
    # reordering can merge neighbours into new clusters; only compare when it does not
    if list(grapheme_clusters(shuffled)) == clusters:
        assert extract_emojis(shuffled, lex)[0] == extract_emojis(text, lex)[0]


def test_counts_permutation_on_tweets(lex):
    rnd = random.Random(3)
    pieces = ["\U0001F600", "\U0001F621", "\U0001F610", "❤️", "\U0001F44D\U0001F3FD", "word", " ", "!"]
    for _ in range(200):
        clusters = [rnd.choice(pieces) for _ in range(rnd.randint(0, 12))]
        before = extract_emojis("".join(clusters), lex)[0]
        rnd.shuffle(clusters)
        assert extract_emojis("".join(clusters), lex)[0] == before
