"""Brute-force reference implementations, kept independent of the library code paths."""

import regex
from uniseg.graphemecluster import grapheme_clusters

CLASSES = ("negative", "neutral", "positive")
_EMOJI_RANGES = [
    (0x1F1E6, 0x1F1FF),  # regional indicators
    (0x1F3FB, 0x1F3FF),  # skin tones
    (0x20E3, 0x20E3),  # keycap
]


def f1_scores(pred, gold):
    """Per-class F1 by counting TP/FP/FN in plain loops."""
    present = []
    for c in CLASSES:
        if any(g == c for g in gold) or any(p == c for p in pred):
            present.append(c)
    scores = {}
    for c in present:
        tp = fp = fn = 0
        for p, g in zip(pred, gold):
            if p == c and g == c:
                tp += 1
            elif p == c and g != c:
                fp += 1
            elif g == c and p != c:
                fn += 1
        prec = tp / (tp + fp) if tp + fp > 0 else 0.0
        rec = tp / (tp + fn) if tp + fn > 0 else 0.0
        scores[c] = 0.0 if prec + rec == 0 else 2 * prec * rec / (prec + rec)
    return scores


def macro_f1(pred, gold):
    scores = f1_scores(pred, gold)
    return sum(scores.values()) / len(scores)


def accuracy(pred, gold):
    hits = 0
    for p, g in zip(pred, gold):
        if p is not None and p == g:
            hits += 1
    return hits / len(gold)


def strict_argmax(counts):
    """Index of a strictly unique positive maximum, else None."""
    best = None
    for i, v in enumerate(counts):
        if v <= 0:
            continue
        if all(v > w for j, w in enumerate(counts) if j != i):
            best = i
    return best


def coverage(tokens, lists, types=False):
    """Score every class by comparing every token against every list word."""
    if types:
        seen = []
        for t in tokens:
            if t not in seen:
                seen.append(t)
        tokens = seen
    out = []
    for c in CLASSES:
        n = 0
        for tok in tokens:
            for word in lists[c]:
                if tok == word:
                    n += 1
        out.append(n)
    return out


def is_emoji_char(ch):
    cp = ord(ch)
    if any(lo <= cp <= hi for lo, hi in _EMOJI_RANGES):
        return True
    return regex.match(r"\p{Extended_Pictographic}", ch) is not None


def extract(text, lexicon):
    """Segment the whole text with uniseg and tally lexicon hits per class."""
    counts = [0, 0, 0]
    kept = []
    for cluster in grapheme_clusters(text):
        key = "".join(ch for ch in cluster if ch not in "\ufe0e\ufe0f" and not 0x1F3FB <= ord(ch) <= 0x1F3FF)
        if key in lexicon:
            counts[CLASSES.index(lexicon[key])] += 1
        elif not any(is_emoji_char(ch) for ch in cluster):
            kept.append(cluster)
    return counts, "".join(kept)
