"""Corpus loading and query filtering over local files.

Supports JSONL (one record object per line) and CSV (header row required,
``mentioned_users`` as a ``|``-separated cell). Malformed rows are never
dropped silently: they are collected into a rejects report alongside the
successfully parsed records.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path

from .records import Query, RecordError, TweetRecord

CSV_FIELDS = [
    "tweet_id",
    "author_id",
    "author_handle",
    "created_at",
    "text",
    "reply_to_user",
    "retweet_of_user",
    "mentioned_users",
    "lang",
]


class CorpusError(Exception):
    """The corpus file itself is unusable (missing, undecodable, bad header)."""


@dataclass(frozen=True)
class Reject:
    line: int
    reason: str


@dataclass
class CorpusLoad:
    records: list[TweetRecord]
    rejects: list[Reject]


def load_corpus(path: str | Path, format: str = "jsonl") -> CorpusLoad:
    """Parse a corpus file, keeping file order and collecting rejects."""
    path = Path(path)
    if not path.is_file():
        raise CorpusError(f"corpus file not found: {path}")
    if format == "jsonl":
        return _load_jsonl(path)
    if format == "csv":
        return _load_csv(path)
    raise CorpusError(f"unknown corpus format {format!r}")


def _load_jsonl(path: Path) -> CorpusLoad:
    records: list[TweetRecord] = []
    rejects: list[Reject] = []
    seen_ids: set[str] = set()
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except (OSError, UnicodeDecodeError) as exc:
        raise CorpusError(f"cannot read {path}: {exc}") from None
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            raw = json.loads(line)
        except json.JSONDecodeError as exc:
            rejects.append(Reject(lineno, f"invalid JSON: {exc.msg}"))
            continue
        _ingest(raw, lineno, seen_ids, records, rejects)
    return CorpusLoad(records, rejects)


def _load_csv(path: Path) -> CorpusLoad:
    records: list[TweetRecord] = []
    rejects: list[Reject] = []
    seen_ids: set[str] = set()
    try:
        with path.open(encoding="utf-8", newline="") as fh:
            reader = csv.DictReader(fh)
            if reader.fieldnames is None:
                raise CorpusError(f"{path}: empty CSV, header row required")
            missing = [c for c in ("tweet_id", "author_id", "created_at") if c not in reader.fieldnames]
            if missing:
                raise CorpusError(f"{path}: header missing columns {missing}")
            for row in reader:
                lineno = reader.line_num
                raw = dict(row)
                cell = raw.get("mentioned_users") or ""
                raw["mentioned_users"] = [m for m in cell.split("|") if m]
                _ingest(raw, lineno, seen_ids, records, rejects)
    except (OSError, UnicodeDecodeError) as exc:
        raise CorpusError(f"cannot read {path}: {exc}") from None
    return CorpusLoad(records, rejects)


def _ingest(raw, lineno, seen_ids, records, rejects) -> None:
    if not isinstance(raw, dict):
        rejects.append(Reject(lineno, "record is not an object"))
        return
    try:
        record = TweetRecord.from_dict(raw)
    except RecordError as exc:
        rejects.append(Reject(lineno, str(exc)))
        return
    if record.tweet_id in seen_ids:
        rejects.append(Reject(lineno, f"duplicate tweet_id {record.tweet_id!r}"))
        return
    seen_ids.add(record.tweet_id)
    records.append(record)


def filter_corpus(corpus: list[TweetRecord], q: Query) -> list[TweetRecord]:
    """Keep records inside the query window whose text matches a keyword
    group, preserving input order. Pure and idempotent."""
    q.validate()
    return [r for r in corpus if q.matches(r)]


def stage_one_users(corpus: list[TweetRecord], q: Query) -> set[str]:
    """Distinct authors of the records a query matches; feeds the second
    stage of a two-stage narrowing strategy."""
    return {r.author_id for r in filter_corpus(corpus, q)}


def write_rejects(rejects: list[Reject], path: str | Path) -> None:
    with Path(path).open("w", encoding="utf-8") as fh:
        for item in rejects:
            fh.write(json.dumps({"line": item.line, "reason": item.reason}) + "\n")


def write_corpus(records: list[TweetRecord], path: str | Path) -> None:
    with Path(path).open("w", encoding="utf-8") as fh:
        for record in records:
            fh.write(json.dumps(record.to_dict(), ensure_ascii=False) + "\n")
