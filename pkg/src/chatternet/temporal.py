"""Spell-based temporal network construction.

Every interaction opens a provisional activation spell of ``window`` days
on its dyad. Overlapping spells are resolved so that each day reflects
the most recent interaction: an earlier spell is truncated to end the day
before the next interaction, and a same-day repeat replaces the earlier
one outright. Node activity intervals are anchored the same way at the
days of incident interactions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from datetime import date, datetime, timezone
from pathlib import Path

from .network import Edge, NodeProfile
from .textcodes import TextCodes


@dataclass(frozen=True)
class Spell:
    onset: int
    terminus: int

    def __post_init__(self):
        if self.onset > self.terminus:
            raise ValueError(f"spell onset {self.onset} after terminus {self.terminus}")

    def contains(self, day: int) -> bool:
        return self.onset <= day <= self.terminus

    def intersects(self, onset: int, terminus: int) -> bool:
        return self.onset <= terminus and self.terminus >= onset


@dataclass(frozen=True)
class DyadSpell:
    """One activation spell of a dyad, carrying the attributes of the
    interaction that anchors it."""

    onset: int
    terminus: int
    from_user: str
    to_user: str
    edge_type: str
    text: str
    sentiment: float
    keyword_flag: int
    tweet_id: str

    def contains(self, day: int) -> bool:
        return self.onset <= day <= self.terminus

    def intersects(self, onset: int, terminus: int) -> bool:
        return self.onset <= terminus and self.terminus >= onset


@dataclass(frozen=True)
class DyadEdge:
    """Unordered dyad (u < v) with disjoint, sorted spells. Interaction
    direction survives as a per-spell attribute."""

    u: str
    v: str
    spells: tuple[DyadSpell, ...]

    def other(self, user_id: str) -> str:
        return self.v if user_id == self.u else self.u


@dataclass(frozen=True)
class NodeInterval:
    user_id: str
    onset: int
    terminus: int
    degree: int
    mean_sentiment: float
    keyword_any: int


@dataclass
class NodeEntry:
    profile: NodeProfile
    intervals: list[NodeInterval]


@dataclass
class TemporalNetwork:
    epoch: date
    window: int
    horizon: int
    nodes: dict[str, NodeEntry]
    edges: list[DyadEdge]


@dataclass(frozen=True)
class SliceNode:
    user_id: str
    profile: NodeProfile
    interval: NodeInterval


@dataclass(frozen=True)
class SliceEdge:
    u: str
    v: str
    spell: DyadSpell


@dataclass(frozen=True)
class SliceGraph:
    day: int
    nodes: tuple[SliceNode, ...]
    edges: tuple[SliceEdge, ...]


def day_index(moment: datetime, epoch: date) -> int:
    return (moment.astimezone(timezone.utc).date() - epoch).days


def corpus_epoch(edges: list[Edge]) -> date:
    if not edges:
        return date(1970, 1, 1)
    return min(e.created_at.astimezone(timezone.utc) for e in edges).date()


def _dyad_key(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a < b else (b, a)


def _spell_attrs(edge: Edge, codes: dict[str, TextCodes] | None, sentiment_source: str):
    if codes is None:
        return 0.0, 0
    code = codes.get(edge.tweet_id)
    if code is None:
        raise KeyError(f"no text codes for tweet {edge.tweet_id!r}")
    sentiment = code.sentiment_rule if sentiment_source == "rule" else code.sentiment_mean
    return sentiment, code.keyword_flag


def spellize(
    edges: list[Edge],
    window: int,
    epoch: date | None = None,
    codes: dict[str, TextCodes] | None = None,
    sentiment_source: str = "rule",
) -> list[DyadEdge]:
    """Group interactions by unordered dyad and resolve overlapping spells.

    Each interaction on day d gets the provisional spell [d, d + window].
    When the next interaction on the same dyad lands on a later day inside
    that span, the earlier spell is truncated to end the day before; a
    same-day repeat drops the earlier interaction entirely (ties broken by
    created_at, then tweet_id). The result is independent of input order.
    """
    if window < 1:
        raise ValueError("window must be >= 1")
    if epoch is None:
        epoch = corpus_epoch(edges)
    grouped: dict[tuple[str, str], list[tuple[int, Edge]]] = {}
    for e in edges:
        if e.from_user == e.to_user:
            continue
        grouped.setdefault(_dyad_key(e.from_user, e.to_user), []).append(
            (day_index(e.created_at, epoch), e)
        )
    dyads = []
    for (u, v), interactions in sorted(grouped.items()):
        interactions.sort(key=lambda item: (item[0], item[1].created_at, item[1].tweet_id))
        latest_per_day: dict[int, Edge] = {}
        for d, e in interactions:
            latest_per_day[d] = e
        anchors = sorted(latest_per_day)
        spells = []
        for i, d in enumerate(anchors):
            terminus = d + window
            if i + 1 < len(anchors):
                terminus = min(terminus, anchors[i + 1] - 1)
            edge = latest_per_day[d]
            sentiment, keyword_flag = _spell_attrs(edge, codes, sentiment_source)
            spells.append(
                DyadSpell(
                    onset=d,
                    terminus=terminus,
                    from_user=edge.from_user,
                    to_user=edge.to_user,
                    edge_type=edge.edge_type,
                    text=edge.text,
                    sentiment=sentiment,
                    keyword_flag=keyword_flag,
                    tweet_id=edge.tweet_id,
                )
            )
        dyads.append(DyadEdge(u=u, v=v, spells=tuple(spells)))
    return dyads


def _intervals_from_spells(user_id: str, incident: list[DyadSpell], window: int) -> list[NodeInterval]:
    anchors = sorted({s.onset for s in incident})
    intervals = []
    for i, anchor in enumerate(anchors):
        terminus = anchor + window
        if i + 1 < len(anchors):
            terminus = min(terminus, anchors[i + 1] - 1)
        active = [s for s in incident if s.intersects(anchor, terminus)]
        intervals.append(
            NodeInterval(
                user_id=user_id,
                onset=anchor,
                terminus=terminus,
                degree=len(active),
                mean_sentiment=sum(s.sentiment for s in active) / len(active),
                keyword_any=max(s.keyword_flag for s in active),
            )
        )
    return intervals


def node_intervals(dyads: list[DyadEdge], user_id: str, window: int) -> list[NodeInterval]:
    """Activity intervals for one user, anchored at the days of incident
    interactions. Degree counts the incident spells intersecting each
    interval; sentiment is their mean, the keyword flag their max.
    """
    incident = [s for d in dyads if user_id in (d.u, d.v) for s in d.spells]
    if not incident:
        raise ValueError(f"user {user_id!r} not in network")
    return _intervals_from_spells(user_id, incident, window)


def build_network(
    edges: list[Edge],
    nodelist: list[NodeProfile],
    window: int,
    codes: dict[str, TextCodes] | None = None,
    sentiment_source: str = "rule",
) -> TemporalNetwork:
    epoch = corpus_epoch(edges)
    dyads = spellize(edges, window, epoch=epoch, codes=codes, sentiment_source=sentiment_source)
    profiles = {p.user_id: p for p in nodelist}
    incident_by_user: dict[str, list[DyadSpell]] = {}
    for dyad in dyads:
        for endpoint in (dyad.u, dyad.v):
            incident_by_user.setdefault(endpoint, []).extend(dyad.spells)
    nodes: dict[str, NodeEntry] = {}
    for user_id in sorted(set(profiles) | set(incident_by_user)):
        profile = profiles.get(user_id) or NodeProfile(user_id=user_id)
        incident = incident_by_user.get(user_id, [])
        intervals = _intervals_from_spells(user_id, incident, window) if incident else []
        nodes[user_id] = NodeEntry(profile=profile, intervals=intervals)
    horizon = 0
    for dyad in dyads:
        for s in dyad.spells:
            horizon = max(horizon, s.terminus)
    return TemporalNetwork(epoch=epoch, window=window, horizon=horizon, nodes=nodes, edges=dyads)


def slice_at(net: TemporalNetwork, day: int) -> SliceGraph:
    """Static graph of everything active on ``day``, each element carrying
    the attributes of the spell or interval covering that day. Days outside
    the horizon yield an empty graph."""
    nodes = []
    for user_id in sorted(net.nodes):
        entry = net.nodes[user_id]
        for interval in entry.intervals:
            if interval.onset <= day <= interval.terminus:
                nodes.append(SliceNode(user_id=user_id, profile=entry.profile, interval=interval))
                break
    edges = []
    for dyad in net.edges:
        for spell in dyad.spells:
            if spell.contains(day):
                edges.append(SliceEdge(u=dyad.u, v=dyad.v, spell=spell))
                break
    return SliceGraph(day=day, nodes=tuple(nodes), edges=tuple(edges))


def total_degree(net: TemporalNetwork, user_id: str) -> int:
    """Number of retained interactions incident to a user over the whole
    horizon (each dyad spell counts once)."""
    return sum(len(d.spells) for d in net.edges if user_id in (d.u, d.v))


def filter_by_total_degree(net: TemporalNetwork, min_degree: int) -> TemporalNetwork:
    """Drop nodes below the total-degree threshold, along with any dyad
    that lost an endpoint; surviving nodes' intervals are recomputed from
    the surviving spells."""
    if min_degree < 0:
        raise ValueError("min_degree must be >= 0")
    if min_degree == 0:
        return net
    keep = {uid for uid in net.nodes if total_degree(net, uid) >= min_degree}
    edges = [d for d in net.edges if d.u in keep and d.v in keep]
    incident_by_user: dict[str, list[DyadSpell]] = {}
    for dyad in edges:
        for endpoint in (dyad.u, dyad.v):
            incident_by_user.setdefault(endpoint, []).extend(dyad.spells)
    nodes = {}
    for user_id in sorted(keep):
        incident = incident_by_user.get(user_id, [])
        intervals = _intervals_from_spells(user_id, incident, net.window) if incident else []
        nodes[user_id] = NodeEntry(profile=net.nodes[user_id].profile, intervals=intervals)
    return TemporalNetwork(
        epoch=net.epoch, window=net.window, horizon=net.horizon, nodes=nodes, edges=edges
    )


def slice_to_dict(graph: SliceGraph) -> dict:
    return {
        "day": graph.day,
        "nodes": [
            {
                "user_id": n.user_id,
                "onset": n.interval.onset,
                "terminus": n.interval.terminus,
                "degree": n.interval.degree,
                "mean_sentiment": n.interval.mean_sentiment,
                "keyword_any": n.interval.keyword_any,
            }
            for n in graph.nodes
        ],
        "edges": [
            {
                "u": e.u,
                "v": e.v,
                "onset": e.spell.onset,
                "terminus": e.spell.terminus,
                "from": e.spell.from_user,
                "to": e.spell.to_user,
                "edge_type": e.spell.edge_type,
                "sentiment": e.spell.sentiment,
                "keyword_flag": e.spell.keyword_flag,
                "tweet_id": e.spell.tweet_id,
            }
            for e in graph.edges
        ],
    }


def network_to_dict(net: TemporalNetwork) -> dict:
    return {
        "epoch": net.epoch.isoformat(),
        "window": net.window,
        "horizon": net.horizon,
        "nodes": [
            {
                "profile": {
                    "user_id": entry.profile.user_id,
                    "handle": entry.profile.handle,
                    "display_name": entry.profile.display_name,
                    "description": entry.profile.description,
                    "location": entry.profile.location,
                    "verified": entry.profile.verified,
                    "followers_count": entry.profile.followers_count,
                    "team": entry.profile.team,
                },
                "intervals": [
                    {
                        "onset": iv.onset,
                        "terminus": iv.terminus,
                        "degree": iv.degree,
                        "mean_sentiment": iv.mean_sentiment,
                        "keyword_any": iv.keyword_any,
                    }
                    for iv in entry.intervals
                ],
            }
            for _, entry in sorted(net.nodes.items())
        ],
        "edges": [
            {
                "u": dyad.u,
                "v": dyad.v,
                "spells": [
                    {
                        "onset": s.onset,
                        "terminus": s.terminus,
                        "from": s.from_user,
                        "to": s.to_user,
                        "edge_type": s.edge_type,
                        "text": s.text,
                        "sentiment": s.sentiment,
                        "keyword_flag": s.keyword_flag,
                        "tweet_id": s.tweet_id,
                    }
                    for s in dyad.spells
                ],
            }
            for dyad in net.edges
        ],
    }


def network_from_dict(raw: dict) -> TemporalNetwork:
    nodes = {}
    for item in raw["nodes"]:
        p = item["profile"]
        profile = NodeProfile(
            user_id=p["user_id"],
            handle=p["handle"],
            display_name=p["display_name"],
            description=p["description"],
            location=p["location"],
            verified=p["verified"],
            followers_count=p["followers_count"],
            team=p["team"],
        )
        intervals = [
            NodeInterval(
                user_id=p["user_id"],
                onset=iv["onset"],
                terminus=iv["terminus"],
                degree=iv["degree"],
                mean_sentiment=iv["mean_sentiment"],
                keyword_any=iv["keyword_any"],
            )
            for iv in item["intervals"]
        ]
        nodes[p["user_id"]] = NodeEntry(profile=profile, intervals=intervals)
    edges = [
        DyadEdge(
            u=item["u"],
            v=item["v"],
            spells=tuple(
                DyadSpell(
                    onset=s["onset"],
                    terminus=s["terminus"],
                    from_user=s["from"],
                    to_user=s["to"],
                    edge_type=s["edge_type"],
                    text=s["text"],
                    sentiment=s["sentiment"],
                    keyword_flag=s["keyword_flag"],
                    tweet_id=s["tweet_id"],
                )
                for s in item["spells"]
            ),
        )
        for item in raw["edges"]
    ]
    return TemporalNetwork(
        epoch=date.fromisoformat(raw["epoch"]),
        window=raw["window"],
        horizon=raw["horizon"],
        nodes=nodes,
        edges=edges,
    )


def write_network(net: TemporalNetwork, path: str | Path) -> None:
    Path(path).write_text(
        json.dumps(network_to_dict(net), indent=2, ensure_ascii=False) + "\n",
        encoding="utf-8",
    )


def read_network(path: str | Path) -> TemporalNetwork:
    return network_from_dict(json.loads(Path(path).read_text(encoding="utf-8")))
