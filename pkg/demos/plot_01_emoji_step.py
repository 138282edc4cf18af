"""
Emoji majority labelling
========================

Count sentiment-bearing emojis per class and label a tweet only when one
class strictly outnumbers the other two.
"""

from emolabel import Tweet, extract_emojis, load_lexicon, step1_emojis

lex = load_lexicon()
print("built-in lexicon sizes:", lex.sizes())

# Skin tones and variation selectors are ignored when matching.
for text in ["Ke thabile kudu 😀😀😡", "le nna 👍🏾", "ga ke itse 😀😡", "no emojis at all"]:
    counts, residual = extract_emojis(text, lex)
    print(f"{text!r:32} -> {counts}  residual={residual!r}")

###############################################################################
# Step 1 splits a corpus into labelled tweets and the rest.
tweets = [Tweet(str(i), t) for i, t in enumerate(["great 😀😀😡", "tie 😀😡", "meh 😐", "plain text"])]
labelled, remaining = step1_emojis(tweets, lex)
for r in labelled:
    print(r.tweet_id, r.label.value, tuple(r.emoji_counts))
print("left for step 3:", [t.id for t in remaining])
