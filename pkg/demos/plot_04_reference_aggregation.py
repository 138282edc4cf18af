"""
Combining per-step accuracies
=============================

The overall accuracy is the count-weighted mean of the two step accuracies.
Recomputing it from the published SAfriSenti per-step figures matches the
reported combined value for Sepedi and Setswana, and comes out 0.4 points
higher than the reported value for English.
"""

from emolabel import weighted_combined
from emolabel.pipeline import step_shares

reference = {
    # step-1 n, step-3 n, step-1 acc, step-3 acc, reported combined acc
    "English": (4210, 2790, 0.687, 0.635, 0.662),
    "Sepedi": (5871, 1129, 0.695, 0.646, 0.687),
    "Setswana": (3249, 3751, 0.661, 0.597, 0.627),
}

print(f"{'language':<10} {'step1%':>7} {'step3%':>7} {'weighted':>9} {'reported':>9}")
for lang, (n1, n3, a1, a3, reported) in reference.items():
    s1, s3 = step_shares(n1, n3)
    w = weighted_combined(n1, a1, n3, a3)
    print(f"{lang:<10} {s1:>7.1f} {s3:>7.1f} {100 * w:>8.1f}% {100 * reported:>8.1f}%")
