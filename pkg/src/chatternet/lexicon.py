"""Valence lexicon assets and loading.

Two bundled lexicons back the two analyzers: ``rule_valence.tsv`` carries
token valences on a [-4, 4] scale for the rule-based compound scorer, and
``mean_polarity.tsv`` carries adjective-leaning polarities already on
[-1, 1] for the matched-token-mean scorer. Paths are overridable so users
can swap in domain lexicons.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path


class LexiconError(ValueError):
    pass


@dataclass(frozen=True)
class SentimentLexicon:
    """Token valences plus the booster and negator tables the rule-based
    heuristics consult. ``scale`` is the divisor that maps raw valences
    onto [-1, 1] for the mean scorer."""

    entries: dict[str, float]
    boosters: dict[str, float]
    negators: frozenset[str]
    scale: float = 4.0

    def validate(self) -> None:
        for table in (self.entries, self.boosters):
            for token, valence in table.items():
                if not token or token != token.lower():
                    raise LexiconError(f"lexicon tokens must be lowercase: {token!r}")
                if not math.isfinite(valence):
                    raise LexiconError(f"non-finite valence for {token!r}")
        for token in self.negators:
            if not token or token != token.lower():
                raise LexiconError(f"negator tokens must be lowercase: {token!r}")


def _read_tsv(path: Path) -> dict[str, float]:
    table: dict[str, float] = {}
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) < 2:
            raise LexiconError(f"{path}:{lineno}: expected token<TAB>valence")
        try:
            table[parts[0]] = float(parts[1])
        except ValueError:
            raise LexiconError(f"{path}:{lineno}: bad valence {parts[1]!r}") from None
    return table


def _asset(name: str) -> Path:
    return Path(str(resources.files("chatternet").joinpath("assets", name)))


def load_rule_lexicon(path: str | Path | None = None) -> SentimentLexicon:
    """Lexicon for the rule-based compound scorer (valences on [-4, 4])."""
    entries = _read_tsv(Path(path) if path else _asset("rule_valence.tsv"))
    boosters = _read_tsv(_asset("boosters.tsv"))
    negators = frozenset(
        token
        for token in _asset("negators.txt").read_text(encoding="utf-8").split()
        if token
    )
    lex = SentimentLexicon(entries=entries, boosters=boosters, negators=negators, scale=4.0)
    lex.validate()
    return lex


def load_mean_lexicon(path: str | Path | None = None) -> SentimentLexicon:
    """Polarity lexicon for the matched-token-mean scorer ([-1, 1] scale)."""
    entries = _read_tsv(Path(path) if path else _asset("mean_polarity.tsv"))
    lex = SentimentLexicon(entries=entries, boosters={}, negators=frozenset(), scale=1.0)
    lex.validate()
    return lex
