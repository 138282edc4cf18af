"""Accuracy, macro-F1 and confusion matrices, split by labelling step."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .corpus_io import SENTIMENTS, Corpus, Sentiment
from .pipeline import LabelRun, Step, step_shares

Label = Optional[Sentiment]

_INDEX = {s: i for i, s in enumerate(SENTIMENTS)}


class EvaluationError(ValueError):
    pass


def _check(pred: Sequence[Label], gold: Sequence[Label]) -> None:
    if len(pred) != len(gold):
        raise EvaluationError(f"length mismatch: {len(pred)} predictions vs {len(gold)} gold labels")


@dataclass(frozen=True)
class ConfusionMatrix:
    counts: np.ndarray  # (3, 3) int, [gold, pred] in SENTIMENTS order
    unlabelled: np.ndarray  # (3,) int, unlabelled predictions per gold class

    @property
    def total(self) -> int:
        return int(self.counts.sum() + self.unlabelled.sum())

    def to_dict(self) -> dict:
        return {
            "labels": [s.value for s in SENTIMENTS],
            "counts": self.counts.tolist(),
            "unlabelled": self.unlabelled.tolist(),
        }


def confusion(pred: Sequence[Label], gold: Sequence[Label]) -> ConfusionMatrix:
    _check(pred, gold)
    counts = np.zeros((3, 3), dtype=np.int64)
    unlabelled = np.zeros(3, dtype=np.int64)
    for p, g in zip(pred, gold):
        if g is None:
            raise EvaluationError("gold label missing")
        if p is None:
            unlabelled[_INDEX[g]] += 1
        else:
            counts[_INDEX[g], _INDEX[p]] += 1
    return ConfusionMatrix(counts, unlabelled)


def accuracy(pred: Sequence[Label], gold: Sequence[Label]) -> float:
    """Fraction of exact matches; an unlabelled prediction is a miss."""
    _check(pred, gold)
    if not gold:
        raise EvaluationError("no evaluable tweets")
    return sum(p is not None and p == g for p, g in zip(pred, gold)) / len(gold)


def per_class_f1(cm: ConfusionMatrix) -> dict[Sentiment, float]:
    """F1 for every class that occurs in gold or predictions."""
    tp = np.diag(cm.counts).astype(float)
    pred_tot = cm.counts.sum(axis=0).astype(float)
    gold_tot = (cm.counts.sum(axis=1) + cm.unlabelled).astype(float)
    out: dict[Sentiment, float] = {}
    for i, s in enumerate(SENTIMENTS):
        if gold_tot[i] == 0 and pred_tot[i] == 0:
            continue
        p = tp[i] / pred_tot[i] if pred_tot[i] else 0.0
        r = tp[i] / gold_tot[i] if gold_tot[i] else 0.0
        out[s] = 2 * p * r / (p + r) if p + r else 0.0
    return out


def macro_f1(pred: Sequence[Label], gold: Sequence[Label]) -> float:
    """Unweighted mean of per-class F1 over classes present in gold or predictions."""
    _check(pred, gold)
    if not gold:
        raise EvaluationError("no evaluable tweets")
    scores = per_class_f1(confusion(pred, gold))
    return sum(scores.values()) / len(scores)


def weighted_combined(n1: int, acc1: float, n3: int, acc3: float) -> float:
    """Count-weighted mean of two step accuracies."""
    if n1 < 0 or n3 < 0:
        raise EvaluationError("counts must be non-negative")
    if n1 + n3 == 0:
        raise EvaluationError("no evaluable tweets")
    return (n1 * acc1 + n3 * acc3) / (n1 + n3)


@dataclass(frozen=True)
class StepMetrics:
    n: int
    accuracy: Optional[float]
    macro_f1: Optional[float]
    confusion: ConfusionMatrix

    @classmethod
    def compute(cls, pred: Sequence[Label], gold: Sequence[Label]) -> "StepMetrics":
        cm = confusion(pred, gold)
        if not gold:
            return cls(0, None, None, cm)
        return cls(len(gold), accuracy(pred, gold), macro_f1(pred, gold), cm)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "accuracy": self.accuracy,
            "macro_f1": self.macro_f1,
            "confusion": self.confusion.to_dict(),
        }


@dataclass(frozen=True)
class EvalReport:
    emoji: StepMetrics
    words: StepMetrics
    combined: StepMetrics
    share_emoji: float  # percent, one decimal
    share_words: float
    # combined accuracy recomputed from the two step accuracies
    weighted_accuracy: Optional[float]

    def to_dict(self) -> dict:
        return {
            "steps": {
                "emoji": self.emoji.to_dict(),
                "words": self.words.to_dict(),
                "combined": self.combined.to_dict(),
            },
            "shares": {"emoji": self.share_emoji, "words": self.share_words},
            "weighted_accuracy": self.weighted_accuracy,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def format_table(self) -> str:
        def pct(x: Optional[float]) -> str:
            return "    -" if x is None else f"{x:5.3f}"

        rows = [
            ("step1 (emoji)", self.emoji, f"{self.share_emoji:.1f}%"),
            ("step3 (words)", self.words, f"{self.share_words:.1f}%"),
            ("step1-to-3", self.combined, "100.0%"),
        ]
        lines = [f"{'step':<14} {'n':>7} {'share':>7} {'accuracy':>9} {'macro-F1':>9}"]
        for name, m, share in rows:
            lines.append(f"{name:<14} {m.n:>7} {share:>7} {pct(m.accuracy):>9} {pct(m.macro_f1):>9}")
        return "\n".join(lines)


def report(run: LabelRun, corpus: Corpus) -> EvalReport:
    """Metrics over step-1 tweets, step-3 tweets (fallback included) and all tweets."""
    missing = [t.id for t in corpus if t.gold is None]
    if missing:
        raise EvaluationError(f"missing gold labels for ids: {', '.join(missing)}")
    absent = [t.id for t in corpus if t.id not in run.results]
    if absent:
        raise EvaluationError(f"label run is missing tweet ids: {', '.join(absent)}")

    parts: dict[str, tuple[list[Label], list[Label]]] = {"emoji": ([], []), "words": ([], [])}
    for t in corpus:
        res = run.results[t.id]
        pred, gold = parts["emoji" if res.step is Step.EMOJI else "words"]
        pred.append(res.label)
        gold.append(t.gold)

    emoji = StepMetrics.compute(*parts["emoji"])
    words = StepMetrics.compute(*parts["words"])
    combined = StepMetrics.compute(parts["emoji"][0] + parts["words"][0], parts["emoji"][1] + parts["words"][1])
    s1, s3 = step_shares(emoji.n, words.n)
    weighted = None
    if combined.n:
        weighted = weighted_combined(emoji.n, emoji.accuracy or 0.0, words.n, words.accuracy or 0.0)
    return EvalReport(emoji, words, combined, s1, s3, weighted)
