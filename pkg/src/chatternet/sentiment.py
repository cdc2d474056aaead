"""Two sentiment polarity scorers over a valence lexicon.

``score_rule_based`` reimplements the classic social-media rule stack:
token valences modified by negation lookback, degree boosters with
distance decay, ALL-CAPS emphasis, contrastive-conjunction reweighting,
and punctuation amplification, with the summed valence squashed onto
(-1, 1). ``score_lexicon_mean`` is the simple alternative: the mean
polarity of matched tokens.

The empirical modifier constants live in :class:`RuleConstants` so they
are auditable and swappable in one place.
"""

from __future__ import annotations

import math
import string
from dataclasses import dataclass, field

from .lexicon import SentimentLexicon

_PUNCTUATION = string.punctuation


@dataclass(frozen=True)
class RuleConstants:
    caps_bonus: float = 0.733
    negation_scalar: float = -0.74
    booster_decay: tuple[float, float, float] = (1.0, 0.95, 0.9)
    exclaim_bonus: float = 0.292
    max_exclaims: int = 4
    question_bonus: float = 0.18
    question_cap: float = 0.96
    but_before: float = 0.5
    but_after: float = 1.5
    never_intensifier: float = 1.25
    normalize_alpha: float = 15.0


DEFAULT_CONSTANTS = RuleConstants()

# Fixed-valence idioms that override the valence of the lexicon word they
# contain ("bad ass" is praise, "the bomb" is not about bombs).
IDIOM_VALENCES = {
    "the shit": 3.0,
    "the bomb": 3.0,
    "bad ass": 1.5,
    "badass": 1.5,
    "bus stop": 0.0,
    "yeah right": -2.0,
    "kiss of death": -1.5,
    "to die for": 3.0,
    "beating heart": 3.5,
    "broken heart": -2.9,
}


def tokenize(text: str) -> list[str]:
    """Whitespace tokens with leading/trailing punctuation stripped.

    A token whose stripped form has two or fewer characters keeps its raw
    form, which preserves emoticons like ``:)`` intact.
    """
    tokens = []
    for raw in text.split():
        stripped = raw.strip(_PUNCTUATION)
        tokens.append(raw if len(stripped) <= 2 else stripped)
    return tokens


def normalize(score: float, alpha: float = 15.0) -> float:
    normalized = score / math.sqrt(score * score + alpha)
    return max(-1.0, min(1.0, normalized))


def _mixed_case(tokens: list[str]) -> bool:
    """True when some but not all tokens are ALL CAPS, i.e. caps carry
    emphasis rather than being the author's default register."""
    upper = sum(1 for t in tokens if t.isupper())
    return 0 < len(tokens) - upper < len(tokens)


def _is_negator(token: str, negators: frozenset[str]) -> bool:
    lowered = token.lower()
    return lowered in negators or "n't" in lowered


def _booster_scalar(
    token: str, valence: float, caps_matter: bool, lex: SentimentLexicon, c: RuleConstants
) -> float:
    scalar = lex.boosters.get(token.lower(), 0.0)
    if scalar == 0.0:
        return 0.0
    if valence < 0:
        scalar = -scalar
    if token.isupper() and caps_matter:
        scalar += c.caps_bonus if valence > 0 else -c.caps_bonus
    return scalar


def _negation_adjust(
    valence: float,
    lowered: list[str],
    distance: int,
    i: int,
    negators: frozenset[str],
    c: RuleConstants,
) -> float:
    # distance counts tokens back from the scored word, zero-based.
    if distance == 0:
        if _is_negator(lowered[i - 1], negators):
            valence *= c.negation_scalar
    elif distance == 1:
        if lowered[i - 2] == "never" and lowered[i - 1] in ("so", "this"):
            valence *= c.never_intensifier
        elif lowered[i - 2] == "without" and lowered[i - 1] == "doubt":
            pass
        elif _is_negator(lowered[i - 2], negators):
            valence *= c.negation_scalar
    elif distance == 2:
        # Parenthesization mirrors the established tool: a bare "so"/"this"
        # immediately before the word intensifies even without "never".
        if (lowered[i - 3] == "never" and lowered[i - 2] in ("so", "this")) or lowered[
            i - 1
        ] in ("so", "this"):
            valence *= c.never_intensifier
        elif lowered[i - 3] == "without" and "doubt" in (lowered[i - 2], lowered[i - 1]):
            pass
        elif _is_negator(lowered[i - 3], negators):
            valence *= c.negation_scalar
    return valence


def _idiom_adjust(valence: float, lowered: list[str], i: int, lex: SentimentLexicon) -> float:
    # Only called once three predecessors exist (i >= 3).
    backward = [
        f"{lowered[i - 1]} {lowered[i]}",
        f"{lowered[i - 2]} {lowered[i - 1]} {lowered[i]}",
        f"{lowered[i - 2]} {lowered[i - 1]}",
        f"{lowered[i - 3]} {lowered[i - 2]} {lowered[i - 1]}",
        f"{lowered[i - 3]} {lowered[i - 2]}",
    ]
    for phrase in backward:
        if phrase in IDIOM_VALENCES:
            valence = IDIOM_VALENCES[phrase]
            break
    if i + 1 < len(lowered):
        ahead = f"{lowered[i]} {lowered[i + 1]}"
        if ahead in IDIOM_VALENCES:
            valence = IDIOM_VALENCES[ahead]
    if i + 2 < len(lowered):
        ahead = f"{lowered[i]} {lowered[i + 1]} {lowered[i + 2]}"
        if ahead in IDIOM_VALENCES:
            valence = IDIOM_VALENCES[ahead]
    # Multi-word dampeners such as "sort of" live in the booster table.
    for phrase in (backward[3], backward[4], backward[2]):
        if phrase in lex.boosters:
            valence += lex.boosters[phrase]
    return valence


def _least_adjust(
    valence: float, lowered: list[str], i: int, lex: SentimentLexicon, c: RuleConstants
) -> float:
    if i > 1 and lowered[i - 1] == "least" and lowered[i - 1] not in lex.entries:
        if lowered[i - 2] not in ("at", "very"):
            valence *= c.negation_scalar
    elif i > 0 and lowered[i - 1] == "least" and lowered[i - 1] not in lex.entries:
        valence *= c.negation_scalar
    return valence


def _token_valence(
    tokens: list[str],
    lowered: list[str],
    i: int,
    caps_matter: bool,
    lex: SentimentLexicon,
    c: RuleConstants,
) -> float:
    token = tokens[i]
    word = lowered[i]
    if word not in lex.entries:
        return 0.0
    valence = lex.entries[word]

    # "no" right before a lexicon word acts as a negator, not a word of
    # its own; a trailing "no X" pattern flips the scored word instead.
    if word == "no" and i + 1 < len(tokens) and lowered[i + 1] in lex.entries:
        valence = 0.0
    if (
        (i > 0 and lowered[i - 1] == "no")
        or (i > 1 and lowered[i - 2] == "no")
        or (i > 2 and lowered[i - 3] == "no" and lowered[i - 1] in ("or", "nor"))
    ):
        valence = lex.entries[word] * c.negation_scalar

    if token.isupper() and caps_matter:
        valence += c.caps_bonus if valence > 0 else -c.caps_bonus

    for distance in range(3):
        if i <= distance:
            continue
        prev = tokens[i - (distance + 1)]
        if prev.lower() in lex.entries:
            continue
        scalar = _booster_scalar(prev, valence, caps_matter, lex, c)
        if scalar != 0.0:
            scalar *= c.booster_decay[distance]
        valence += scalar
        valence = _negation_adjust(valence, lowered, distance, i, lex.negators, c)
        if distance == 2:
            valence = _idiom_adjust(valence, lowered, i, lex)

    return _least_adjust(valence, lowered, i, lex, c)


def _but_reweight(valences: list[float], lowered: list[str], c: RuleConstants) -> list[float]:
    if "but" not in lowered:
        return valences
    pivot = lowered.index("but")
    return [
        v * (c.but_before if i < pivot else c.but_after) if i != pivot else v
        for i, v in enumerate(valences)
    ]


def _punctuation_amplifier(text: str, c: RuleConstants) -> float:
    exclaims = min(text.count("!"), c.max_exclaims)
    amplifier = exclaims * c.exclaim_bonus
    questions = text.count("?")
    if questions > 1:
        amplifier += questions * c.question_bonus if questions <= 3 else c.question_cap
    return amplifier


def score_rule_based(
    text: str, lex: SentimentLexicon, constants: RuleConstants = DEFAULT_CONSTANTS
) -> float:
    """Compound sentiment polarity of ``text`` in (-1, 1).

    Unknown tokens contribute nothing; an empty or fully-unknown text
    scores exactly 0.0.
    """
    tokens = tokenize(text)
    lowered = [t.lower() for t in tokens]
    caps_matter = _mixed_case(tokens)

    valences: list[float] = []
    for i, token in enumerate(tokens):
        word = lowered[i]
        if word in lex.boosters:
            valences.append(0.0)
            continue
        if word == "kind" and i + 1 < len(tokens) and lowered[i + 1] == "of":
            valences.append(0.0)
            continue
        valences.append(_token_valence(tokens, lowered, i, caps_matter, lex, constants))

    valences = _but_reweight(valences, lowered, constants)
    total = sum(valences)
    if total == 0.0:
        return 0.0
    amplifier = _punctuation_amplifier(text, constants)
    total += amplifier if total > 0 else -amplifier
    return normalize(total, constants.normalize_alpha)


def score_lexicon_mean(text: str, lex: SentimentLexicon) -> float:
    """Mean polarity of the tokens found in the lexicon, rescaled to
    [-1, 1]; 0.0 when nothing matches."""
    matched = [lex.entries[t.lower()] for t in tokenize(text) if t.lower() in lex.entries]
    if not matched:
        return 0.0
    mean = sum(matched) / len(matched) / lex.scale
    return max(-1.0, min(1.0, mean))
