"""Edgelist and nodelist construction from interaction records."""

from __future__ import annotations

import csv
import logging
from dataclasses import dataclass
from datetime import datetime
from pathlib import Path

from .records import TweetRecord, format_utc, parse_utc

log = logging.getLogger(__name__)

EDGE_TYPES = ("mention", "reply", "retweet")
TEAMS = ("musk", "openai", "none")

EDGELIST_COLUMNS = ["tweet_id", "created_at", "from", "to", "text", "edge_type"]
NODELIST_COLUMNS = [
    "user_id",
    "handle",
    "display_name",
    "description",
    "location",
    "verified",
    "followers_count",
    "team",
]


@dataclass(frozen=True)
class Edge:
    """One directed interaction: from the acting user to its target."""

    tweet_id: str
    created_at: datetime
    from_user: str
    to_user: str
    text: str
    edge_type: str


@dataclass
class NodeProfile:
    user_id: str
    handle: str = ""
    display_name: str = ""
    description: str = ""
    location: str = ""
    verified: bool = False
    followers_count: int = 0
    team: str = "none"

    def __post_init__(self):
        if not self.handle:
            self.handle = self.user_id
        if self.followers_count < 0:
            raise ValueError(f"followers_count must be >= 0 for {self.user_id}")
        if self.team not in TEAMS:
            raise ValueError(f"unknown team {self.team!r} for {self.user_id}")


def build_edgelist(records: list[TweetRecord]) -> list[Edge]:
    """Expand each record into edges: one reply or retweet edge plus one
    mention edge per mentioned user.

    The reply/retweet target is not emitted again as a mention (replies
    embed an automatic mention of the target, and double edges would
    double-count dyad intensity). Self-edges are dropped. Output order is
    stable: (created_at, tweet_id, to).
    """
    edges: list[Edge] = []
    for r in records:
        primary: tuple[str, str] | None = None
        if r.reply_to_user is not None:
            primary = (r.reply_to_user, "reply")
        elif r.retweet_of_user is not None:
            primary = (r.retweet_of_user, "retweet")
        if primary is not None and primary[0] != r.author_id:
            edges.append(
                Edge(r.tweet_id, r.created_at, r.author_id, primary[0], r.text, primary[1])
            )
        for target in r.mentioned_users:
            if primary is not None and target == primary[0]:
                continue
            if target == r.author_id:
                continue
            edges.append(Edge(r.tweet_id, r.created_at, r.author_id, target, r.text, "mention"))
    edges.sort(key=lambda e: (e.created_at, e.tweet_id, e.to_user))
    return edges


def build_nodelist(
    edges: list[Edge],
    profiles: dict[str, NodeProfile] | None = None,
    teams: dict[str, str] | None = None,
) -> list[NodeProfile]:
    """One profile per distinct user appearing in the edgelist.

    Users without a supplied profile get a stub so the pipeline stays
    total when profile data is unavailable. Team assignments for users
    that never appear in the edges are logged, not fatal.
    """
    profiles = profiles or {}
    teams = teams or {}
    user_ids = sorted({e.from_user for e in edges} | {e.to_user for e in edges})
    known = set(user_ids)
    for user_id in teams:
        if user_id not in known:
            log.warning("team assignment for %s ignored: user not in edgelist", user_id)
    nodelist = []
    for user_id in user_ids:
        profile = profiles.get(user_id)
        if profile is None:
            profile = NodeProfile(user_id=user_id, handle=user_id)
        if user_id in teams:
            profile.team = teams[user_id]
            if profile.team not in TEAMS:
                raise ValueError(f"unknown team {profile.team!r} for {user_id}")
        nodelist.append(profile)
    return nodelist


def write_edgelist(edges: list[Edge], path: str | Path) -> None:
    with Path(path).open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(EDGELIST_COLUMNS)
        for e in edges:
            writer.writerow(
                [e.tweet_id, format_utc(e.created_at), e.from_user, e.to_user, e.text, e.edge_type]
            )


def read_edgelist(path: str | Path) -> list[Edge]:
    edges = []
    with Path(path).open(encoding="utf-8", newline="") as fh:
        for row in csv.DictReader(fh):
            edges.append(
                Edge(
                    tweet_id=row["tweet_id"],
                    created_at=parse_utc(row["created_at"]),
                    from_user=row["from"],
                    to_user=row["to"],
                    text=row["text"],
                    edge_type=row["edge_type"],
                )
            )
    return edges


def write_nodelist(nodes: list[NodeProfile], path: str | Path) -> None:
    with Path(path).open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(NODELIST_COLUMNS)
        for n in nodes:
            writer.writerow(
                [
                    n.user_id,
                    n.handle,
                    n.display_name,
                    n.description,
                    n.location,
                    "true" if n.verified else "false",
                    n.followers_count,
                    n.team,
                ]
            )


def read_nodelist(path: str | Path) -> list[NodeProfile]:
    nodes = []
    with Path(path).open(encoding="utf-8", newline="") as fh:
        for row in csv.DictReader(fh):
            nodes.append(
                NodeProfile(
                    user_id=row["user_id"],
                    handle=row["handle"],
                    display_name=row["display_name"],
                    description=row["description"],
                    location=row["location"],
                    verified=row["verified"] == "true",
                    followers_count=int(row["followers_count"]),
                    team=row["team"],
                )
            )
    return nodes


def read_profiles(path: str | Path) -> dict[str, NodeProfile]:
    """Load auxiliary profile data from a JSONL file keyed by user_id."""
    import json

    profiles = {}
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if not line.strip():
            continue
        raw = json.loads(line)
        profile = NodeProfile(
            user_id=str(raw["user_id"]),
            handle=str(raw.get("handle", "")),
            display_name=str(raw.get("display_name", "")),
            description=str(raw.get("description", "")),
            location=str(raw.get("location", "")),
            verified=bool(raw.get("verified", False)),
            followers_count=int(raw.get("followers_count", 0)),
            team=str(raw.get("team", "none")),
        )
        profiles[profile.user_id] = profile
    return profiles
