"""Core record types for interaction corpora: posts and query filters."""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime, timezone


class RecordError(ValueError):
    """A raw record cannot be turned into a valid TweetRecord."""


class QueryError(ValueError):
    """A query specification violates its invariants."""


def parse_utc(value: str | datetime) -> datetime:
    """Parse an ISO-8601 timestamp into an aware UTC datetime.

    Naive timestamps are taken to be UTC. A trailing ``Z`` is accepted on
    Python 3.10, where ``fromisoformat`` does not yet understand it.
    """
    if isinstance(value, datetime):
        dt = value
    else:
        text = value.strip()
        if text.endswith(("Z", "z")):
            text = text[:-1] + "+00:00"
        try:
            dt = datetime.fromisoformat(text)
        except ValueError as exc:
            raise RecordError(f"bad timestamp {value!r}: {exc}") from None
    if dt.tzinfo is None:
        return dt.replace(tzinfo=timezone.utc)
    return dt.astimezone(timezone.utc)


def format_utc(dt: datetime) -> str:
    return dt.astimezone(timezone.utc).isoformat()


@dataclass(frozen=True)
class TweetRecord:
    """One post: a reply, a retweet, or an original, plus its mentions."""

    tweet_id: str
    author_id: str
    author_handle: str
    created_at: datetime
    text: str
    reply_to_user: str | None = None
    retweet_of_user: str | None = None
    mentioned_users: tuple[str, ...] = ()
    lang: str | None = None

    def validate(self) -> None:
        if not self.tweet_id:
            raise RecordError("tweet_id must be non-empty")
        if not self.author_id:
            raise RecordError("author_id must be non-empty")
        if self.reply_to_user is not None and self.retweet_of_user is not None:
            raise RecordError(
                "at most one of reply_to_user / retweet_of_user may be set"
            )
        if len(set(self.mentioned_users)) != len(self.mentioned_users):
            raise RecordError("mentioned_users contains duplicates")
        if self.author_id in self.mentioned_users:
            raise RecordError("mentioned_users must not contain the author")
        if self.created_at.tzinfo is None:
            raise RecordError("created_at must be timezone-aware")

    def to_dict(self) -> dict:
        return {
            "tweet_id": self.tweet_id,
            "author_id": self.author_id,
            "author_handle": self.author_handle,
            "created_at": format_utc(self.created_at),
            "text": self.text,
            "reply_to_user": self.reply_to_user,
            "retweet_of_user": self.retweet_of_user,
            "mentioned_users": list(self.mentioned_users),
            "lang": self.lang,
        }

    @classmethod
    def from_dict(cls, raw: dict) -> "TweetRecord":
        try:
            mentions = raw.get("mentioned_users") or []
            if not isinstance(mentions, (list, tuple)):
                raise RecordError("mentioned_users must be a list")
            record = cls(
                tweet_id=str(raw["tweet_id"]),
                author_id=str(raw["author_id"]),
                author_handle=str(raw.get("author_handle", "")),
                created_at=parse_utc(raw["created_at"]),
                text=str(raw.get("text", "")),
                reply_to_user=_opt_str(raw.get("reply_to_user")),
                retweet_of_user=_opt_str(raw.get("retweet_of_user")),
                mentioned_users=tuple(str(m) for m in mentions),
                lang=_opt_str(raw.get("lang")),
            )
        except KeyError as exc:
            raise RecordError(f"missing field {exc.args[0]!r}") from None
        record.validate()
        return record


def _opt_str(value) -> str | None:
    if value is None or value == "":
        return None
    return str(value)


@dataclass(frozen=True)
class Query:
    """Keyword/time-window filter.

    ``keyword_groups`` is a disjunction of conjunctions: a record matches
    when at least one group has all of its keywords present in the text.
    The time window is half-open, ``[from_time, to_time)``.
    """

    keyword_groups: tuple[tuple[str, ...], ...]
    from_time: datetime
    to_time: datetime
    restrict_to_users: frozenset[str] | None = None
    case_sensitive: bool = False

    def validate(self) -> None:
        if self.from_time >= self.to_time:
            raise QueryError("from_time must precede to_time")
        if not self.keyword_groups:
            raise QueryError("at least one keyword group is required")
        for group in self.keyword_groups:
            if not group or any(not kw for kw in group):
                raise QueryError("keyword groups must be non-empty")

    @classmethod
    def build(
        cls,
        keyword_groups,
        from_time,
        to_time,
        restrict_to_users=None,
        case_sensitive: bool = False,
    ) -> "Query":
        query = cls(
            keyword_groups=tuple(tuple(g) for g in keyword_groups),
            from_time=parse_utc(from_time),
            to_time=parse_utc(to_time),
            restrict_to_users=(
                frozenset(restrict_to_users) if restrict_to_users is not None else None
            ),
            case_sensitive=case_sensitive,
        )
        query.validate()
        return query

    def matches_text(self, text: str) -> bool:
        haystack = text if self.case_sensitive else text.casefold()
        for group in self.keyword_groups:
            needles = group if self.case_sensitive else [kw.casefold() for kw in group]
            if all(kw in haystack for kw in needles):
                return True
        return False

    def matches(self, record: TweetRecord) -> bool:
        if not (self.from_time <= record.created_at < self.to_time):
            return False
        if (
            self.restrict_to_users is not None
            and record.author_id not in self.restrict_to_users
        ):
            return False
        return self.matches_text(record.text)
