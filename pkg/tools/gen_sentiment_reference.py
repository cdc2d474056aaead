"""Freeze the 200-sentence sentiment reference fixture.

Sentences are composed deterministically to exercise every rule branch
(negation at each lookback distance, boosters, ALL-CAPS, punctuation
amplification, contrastive "but", idioms, emoticons, no-match texts) and
scored once with the reference-route analyzer from reference_scorer.py.
The frozen output is what the production analyzer is tested against.
"""

from __future__ import annotations

import json
import random
from pathlib import Path

from reference_scorer import ReferenceAnalyzer

ROOT = Path(__file__).resolve().parent.parent
OUT = ROOT / "tests" / "data" / "sentiment_reference.json"

POSITIVE = [
    "good", "great", "happy", "amazing", "wonderful", "brilliant", "excellent",
    "fantastic", "lovely", "impressive", "helpful", "exciting", "inspiring", "safe",
]
NEGATIVE = [
    "bad", "terrible", "horrible", "awful", "disappointing", "dangerous", "broken",
    "useless", "scary", "harmful", "toxic", "miserable", "wrong", "risky",
]
BOOSTERS = ["very", "really", "extremely", "so", "totally", "incredibly", "quite"]
DAMPENERS = ["slightly", "somewhat", "barely", "hardly", "kinda", "marginally"]
NEGATORS = ["not", "never", "isn't", "wasn't", "hardly ever", "won't be"]
SUBJECTS = [
    "the update", "this chatbot", "the new model", "that answer", "the rollout",
    "the demo", "this thread", "the assistant", "the beta", "that feature",
]
NEUTRAL_TAILS = [
    "shipped on schedule", "runs on my laptop", "has twelve settings",
    "was discussed at noon", "links to the docs",
]
EMOTICONS = [":)", ":(", ":D", "<3", ":/"]
IDIOMS = ["the bomb", "bad ass", "to die for", "kiss of death", "yeah right"]


def build_sentences() -> list[str]:
    rng = random.Random(12345)
    sentences: list[str] = []

    def pos() -> str:
        return rng.choice(POSITIVE)

    def neg() -> str:
        return rng.choice(NEGATIVE)

    def subj() -> str:
        return rng.choice(SUBJECTS)

    recipes = [
        lambda: f"{subj()} is {pos()}",
        lambda: f"{subj()} is {neg()}",
        lambda: f"{subj()} is not {pos()}",
        lambda: f"{subj()} is never {neg()}",
        lambda: f"{subj()} is {rng.choice(BOOSTERS)} {pos()}",
        lambda: f"{subj()} is {rng.choice(DAMPENERS)} {neg()}",
        lambda: f"{subj()} is {rng.choice(BOOSTERS)} {rng.choice(BOOSTERS)} {pos()}",
        lambda: f"{subj()} is {pos().upper()} and {pos()}",
        lambda: f"{subj()} is {pos()}!",
        lambda: f"{subj()} is {neg()}!!",
        lambda: f"{subj()} is {pos()}!!!",
        lambda: f"why is {subj()} so {neg()}??",
        lambda: f"{subj()} is {pos()} but the docs are {neg()}",
        lambda: f"{subj()} was {neg()} but now it is {pos()}",
        lambda: f"{subj()} {rng.choice(NEUTRAL_TAILS)}",
        lambda: f"{subj()} is {pos()} {rng.choice(EMOTICONS)}",
        lambda: f"honestly {subj()} is {rng.choice(IDIOMS)}",
        lambda: f"{subj()} is no {pos()}",
        lambda: f"without a doubt {subj()} is {pos()}",
        lambda: f"{subj()} has never been this {pos()}",
        lambda: f"at least {subj()} is not {neg()}",
        lambda: f"{subj()} is kind of {pos()}",
        lambda: f"isn't {subj()} {rng.choice(BOOSTERS)} {neg()}",
        lambda: f"@user_u07 says {subj()} is {pos()} #ai",
        lambda: f"RT @user_u03: {subj()} is {neg()} https://example.com/x",
    ]
    while len(sentences) < 200:
        sentence = recipes[len(sentences) % len(recipes)]()
        sentences.append(sentence)
    return sentences


def main() -> None:
    analyzer = ReferenceAnalyzer()
    rows = [
        {"text": text, "compound": analyzer.polarity_scores(text)["compound"]}
        for text in build_sentences()
    ]
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(rows, indent=1, ensure_ascii=False) + "\n", encoding="utf-8")
    nonzero = sum(1 for r in rows if r["compound"] != 0.0)
    print(f"wrote {len(rows)} sentences ({nonzero} with nonzero compound) to {OUT}")


if __name__ == "__main__":
    main()
