"""
Inducing disjoint word lists
============================

Words from emoji-labelled tweets are pooled per class. A word seen under more
than one class is dropped, and the leftovers label the remaining tweets by
coverage.
"""

from emolabel import PipelineConfig, Sentiment, Tweet, step2_lists, step3_words

seed = [
    (Tweet("1", "good day with friends"), Sentiment.POSITIVE),
    (Tweet("2", "bad day, so tired"), Sentiment.NEGATIVE),
    (Tweet("3", "day two of the meeting"), Sentiment.NEUTRAL),
]
lists = step2_lists(seed)
print(lists.to_json())

rest = [Tweet("4", "good friends!"), Tweet("5", "tired of the bad news"), Tweet("6", "good but tired")]
for cfg in (PipelineConfig(), PipelineConfig(fallback="none")):
    print(f"fallback={cfg.fallback.value}")
    for r in step3_words(rest, lists, cfg):
        print("  ", r.tweet_id, r.label and r.label.value, r.step.value, tuple(r.coverage))
