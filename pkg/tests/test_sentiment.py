import json
import math
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from chatternet.lexicon import LexiconError, SentimentLexicon
from chatternet.sentiment import normalize, score_lexicon_mean, score_rule_based, tokenize

DATA = Path(__file__).parent / "data"

TABLE_ROW_1 = (
    "Just as I predicted last summer, authorities have started restricting young "
    "people's access to Large Language Models. Italy has banned #ChatGPT due to "
    '"privacy concerns," with one of the reasons being that @OpenAI doesn\'t verify '
    "the age of its users."
)
TABLE_ROW_2 = (
    "@intelligentHQ @OpenAI @Google @Microsoft @nvidia It's exciting to see how "
    "Generative AI like GPT-4 is improving its performance in language tasks, like "
    "passing simulated bar exams. Can't wait to see what other breakthroughs are on "
    "the horizon!"
)


class TestTokenize:
    def test_strips_edge_punctuation(self):
        assert tokenize("hello, world!") == ["hello", "world"]

    def test_preserves_emoticons(self):
        assert tokenize("nice :) day") == ["nice", ":)", "day"]

    def test_short_tokens_keep_raw_form(self):
        assert tokenize("ok!") == ["ok!"]


class TestRuleScorer:
    def test_empty_text(self, rule_lex):
        assert score_rule_based("", rule_lex) == 0.0

    def test_unknown_tokens_contribute_zero(self, rule_lex):
        assert score_rule_based("zzzq qqqz frobnicate", rule_lex) == 0.0

    def test_single_token_matches_closed_form(self, rule_lex):
        # Independent evaluation of the squashing formula on one token.
        s = rule_lex.entries["good"]
        assert score_rule_based("good", rule_lex) == pytest.approx(s / math.sqrt(s * s + 15))

    def test_published_example_negative(self, rule_lex):
        assert score_rule_based(TABLE_ROW_1, rule_lex) == pytest.approx(-0.681, abs=0.05)

    def test_published_example_positive(self, rule_lex):
        assert score_rule_based(TABLE_ROW_2, rule_lex) == pytest.approx(0.883, abs=0.05)

    def test_reference_fixture_agreement(self, rule_lex):
        rows = json.loads((DATA / "sentiment_reference.json").read_text(encoding="utf-8"))
        assert len(rows) == 200
        hits = sum(
            1
            for row in rows
            if abs(score_rule_based(row["text"], rule_lex) - row["compound"]) <= 0.001
        )
        assert hits >= 0.95 * len(rows)

    def test_booster_strengthens(self, rule_lex):
        assert score_rule_based("very good", rule_lex) > score_rule_based("good", rule_lex)

    def test_dampener_weakens(self, rule_lex):
        assert 0 < score_rule_based("slightly good", rule_lex) < score_rule_based("good", rule_lex)

    def test_caps_emphasis(self, rule_lex):
        assert score_rule_based("GOOD day today", rule_lex) > score_rule_based(
            "good day today", rule_lex
        )

    def test_negation_flips_sign(self, rule_lex):
        assert score_rule_based("not good", rule_lex) < 0
        assert score_rule_based("not terrible", rule_lex) > 0

    def test_exclamation_amplifies(self, rule_lex):
        base = score_rule_based("this is good", rule_lex)
        assert score_rule_based("this is good!!", rule_lex) > base
        neg = score_rule_based("this is terrible", rule_lex)
        assert score_rule_based("this is terrible!!", rule_lex) < neg

    def test_but_clause_reweights(self, rule_lex):
        assert score_rule_based("slow but amazing", rule_lex) > score_rule_based(
            "amazing but slow", rule_lex
        )

    def test_monotone_in_valence_sum(self, rule_lex):
        scores = [
            score_rule_based(" ".join(["good"] * n), rule_lex) for n in range(1, 6)
        ]
        assert scores == sorted(scores)
        assert all(s < 1.0 for s in scores)

    def test_idiom_override(self, rule_lex):
        # "bad ass" is praise despite containing a negative token.
        assert score_rule_based("that show was bad ass honestly", rule_lex) > 0


@given(st.text(alphabet=st.characters(codec="ascii"), max_size=60))
def test_rule_score_bounded(s):
    from chatternet.lexicon import load_rule_lexicon

    lex = load_rule_lexicon()
    assert -1.0 < score_rule_based(s, lex) < 1.0


def test_normalize_monotone_and_clipped():
    xs = [-50.0, -5.0, -1.0, 0.0, 1.0, 5.0, 50.0]
    ys = [normalize(x) for x in xs]
    assert ys == sorted(ys)
    assert all(-1.0 <= y <= 1.0 for y in ys)
    assert normalize(0.0) == 0.0


class TestMeanScorer:
    def test_no_match_is_zero(self, mean_lex):
        assert score_lexicon_mean("qqq zzz", mean_lex) == 0.0

    def test_symmetric_pair_cancels(self):
        lex = SentimentLexicon(
            entries={"up": 0.5, "down": -0.5}, boosters={}, negators=frozenset(), scale=1.0
        )
        assert score_lexicon_mean("up down", lex) == 0.0

    def test_published_example(self, mean_lex):
        assert score_lexicon_mean(TABLE_ROW_2, mean_lex) == pytest.approx(0.072, abs=0.15)

    def test_rescaling_by_lexicon_scale(self, rule_lex):
        assert score_lexicon_mean("good", rule_lex) == pytest.approx(
            rule_lex.entries["good"] / 4.0
        )

    def test_bounded(self, mean_lex):
        lex = SentimentLexicon(
            entries={"big": 8.0}, boosters={}, negators=frozenset(), scale=1.0
        )
        assert score_lexicon_mean("big", lex) == 1.0


class TestLexiconValidation:
    def test_uppercase_token_rejected(self):
        lex = SentimentLexicon(entries={"Bad": -1.0}, boosters={}, negators=frozenset())
        with pytest.raises(LexiconError):
            lex.validate()

    def test_non_finite_valence_rejected(self):
        lex = SentimentLexicon(entries={"bad": float("nan")}, boosters={}, negators=frozenset())
        with pytest.raises(LexiconError):
            lex.validate()
