"""Per-tweet text codes (two sentiment scores, binary keyword flag) and
their daily aggregates."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from datetime import date, datetime, timezone
from pathlib import Path

from .lexicon import SentimentLexicon
from .records import TweetRecord, parse_utc
from .sentiment import score_lexicon_mean, score_rule_based

CODES_COLUMNS = ["tweet_id", "sentiment_rule", "sentiment_mean", "keyword_flag"]
DAILY_COLUMNS = ["day", "mean_rule", "mean_lexmean", "keyword_count", "tweet_count"]


@dataclass(frozen=True)
class TextCodes:
    tweet_id: str
    sentiment_rule: float
    sentiment_mean: float
    keyword_flag: int


@dataclass(frozen=True)
class DailyStats:
    day: date
    mean_rule: float
    mean_lexmean: float
    keyword_count: int
    tweet_count: int


def code_keywords(text: str, keywords: list[str]) -> int:
    """1 iff the text contains at least one keyword, else 0.

    Matching is case-insensitive substring containment, so "harm" flags
    "harmful" too. An empty keyword list is an error rather than a silent
    all-zeros run.
    """
    if not keywords:
        raise ValueError("keyword list must not be empty")
    haystack = text.casefold()
    return 1 if any(kw.casefold() in haystack for kw in keywords) else 0


def code_corpus(
    records: list[TweetRecord],
    rule_lex: SentimentLexicon,
    mean_lex: SentimentLexicon,
    keywords: list[str],
) -> list[TextCodes]:
    return [
        TextCodes(
            tweet_id=r.tweet_id,
            sentiment_rule=score_rule_based(r.text, rule_lex),
            sentiment_mean=score_lexicon_mean(r.text, mean_lex),
            keyword_flag=code_keywords(r.text, keywords),
        )
        for r in records
    ]


def daily_aggregate(codes: list[tuple[datetime, TextCodes]]) -> list[DailyStats]:
    """Group codes by UTC calendar day; days without tweets are omitted."""
    buckets: dict[date, list[TextCodes]] = {}
    for created_at, code in codes:
        day = created_at.astimezone(timezone.utc).date()
        buckets.setdefault(day, []).append(code)
    out = []
    for day in sorted(buckets):
        items = buckets[day]
        n = len(items)
        out.append(
            DailyStats(
                day=day,
                mean_rule=sum(c.sentiment_rule for c in items) / n,
                mean_lexmean=sum(c.sentiment_mean for c in items) / n,
                keyword_count=sum(c.keyword_flag for c in items),
                tweet_count=n,
            )
        )
    return out


def write_codes(codes: list[TextCodes], path: str | Path) -> None:
    with Path(path).open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CODES_COLUMNS)
        for c in codes:
            writer.writerow(
                [c.tweet_id, repr(c.sentiment_rule), repr(c.sentiment_mean), c.keyword_flag]
            )


def read_codes(path: str | Path) -> dict[str, TextCodes]:
    codes = {}
    with Path(path).open(encoding="utf-8", newline="") as fh:
        for row in csv.DictReader(fh):
            codes[row["tweet_id"]] = TextCodes(
                tweet_id=row["tweet_id"],
                sentiment_rule=float(row["sentiment_rule"]),
                sentiment_mean=float(row["sentiment_mean"]),
                keyword_flag=int(row["keyword_flag"]),
            )
    return codes


def write_daily(stats: list[DailyStats], path: str | Path) -> None:
    with Path(path).open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(DAILY_COLUMNS)
        for s in stats:
            writer.writerow(
                [
                    s.day.isoformat(),
                    repr(s.mean_rule),
                    repr(s.mean_lexmean),
                    s.keyword_count,
                    s.tweet_count,
                ]
            )
