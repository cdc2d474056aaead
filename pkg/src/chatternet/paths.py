"""Time-respecting reachability over spell networks.

A spell [onset, terminus] incident to a node reached at day a can pass
activity onward at day max(a, onset), provided that day does not exceed
the terminus; waiting at a node is free. Forward trees record earliest
arrivals from a root; backward trees are the same computation under time
reversal and record latest departures that still reach the root in time.
"""

from __future__ import annotations

import csv
import heapq
import json
from dataclasses import dataclass
from pathlib import Path

from .temporal import TemporalNetwork

OVERLAP_CLASSES = ("A_only", "B_only", "both", "neither")


class PathError(ValueError):
    pass


@dataclass(frozen=True)
class PathEntry:
    arrival: int
    generation: int
    predecessor: str | None


@dataclass(frozen=True)
class PathTree:
    root: str
    direction: str  # "forward" | "backward"
    start_day: int
    mode: str  # "undirected" | "directed"
    entries: dict[str, PathEntry]

    def reached(self, day: int | None = None) -> set[str]:
        if day is None:
            return set(self.entries)
        if self.direction == "forward":
            return {uid for uid, e in self.entries.items() if e.arrival <= day}
        return {uid for uid, e in self.entries.items() if e.arrival >= day}


def _traverse(net: TemporalNetwork, root: str, start: int, mode: str, reverse: bool):
    if root not in net.nodes:
        raise PathError(f"root {root!r} not in network")
    if mode not in ("undirected", "directed"):
        raise PathError(f"unknown traversal mode {mode!r}")
    adjacency: dict[str, list[tuple[str, int, int, str]]] = {uid: [] for uid in net.nodes}
    for dyad in net.edges:
        for s in dyad.spells:
            onset, terminus = (-s.terminus, -s.onset) if reverse else (s.onset, s.terminus)
            adjacency[dyad.u].append((dyad.v, onset, terminus, s.from_user))
            adjacency[dyad.v].append((dyad.u, onset, terminus, s.from_user))

    start_key = -start if reverse else start
    entries: dict[str, PathEntry] = {}
    # Ties among equal arrivals resolve to the smaller generation, then the
    # lexicographically smaller predecessor, so repeated runs are stable.
    heap: list[tuple[int, int, str, str]] = [(start_key, 0, "", root)]
    while heap:
        arrival, generation, pred, node = heapq.heappop(heap)
        if node in entries:
            continue
        entries[node] = PathEntry(
            arrival=-arrival if reverse else arrival,
            generation=generation,
            predecessor=pred or None,
        )
        for other, onset, terminus, from_user in adjacency[node]:
            if other in entries:
                continue
            if mode == "directed":
                # Forward influence travels along the interaction's own
                # direction; under time reversal the roles swap.
                required = other if reverse else node
                if from_user != required:
                    continue
            depart = max(arrival, onset)
            if depart <= terminus:
                heapq.heappush(heap, (depart, generation + 1, node, other))
    return entries


def forward_path(
    net: TemporalNetwork, root: str, start_day: int, mode: str = "undirected"
) -> PathTree:
    """Earliest-arrival tree of everything reachable from ``root`` by
    time-respecting spells, starting no earlier than ``start_day``."""
    entries = _traverse(net, root, start_day, mode, reverse=False)
    return PathTree(root=root, direction="forward", start_day=start_day, mode=mode, entries=entries)


def backward_path(
    net: TemporalNetwork, root: str, end_day: int, mode: str = "undirected"
) -> PathTree:
    """Latest-departure tree of everything that can reach ``root`` by
    ``end_day``; the mirror of :func:`forward_path` under time reversal."""
    entries = _traverse(net, root, end_day, mode, reverse=True)
    return PathTree(root=root, direction="backward", start_day=end_day, mode=mode, entries=entries)


def timeline_rows(tree: PathTree) -> list[tuple[str, int, int]]:
    """(user_id, arrival_day, generation) sorted by arrival, generation,
    then id; the root appears at generation 0."""
    rows = [(uid, e.arrival, e.generation) for uid, e in tree.entries.items()]
    rows.sort(key=lambda r: (r[1], r[2], r[0]))
    return rows


def write_timeline_csv(rows: list[tuple[str, int, int]], path: str | Path) -> None:
    with Path(path).open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["user_id", "arrival_day", "generation"])
        writer.writerows(rows)


def timeline_svg(rows: list[tuple[str, int, int]]) -> str:
    """Scatter of arrival day (x) against generation (y) in a fixed
    800x400 viewBox."""
    width, height, margin = 800, 400, 45
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<line x1="{margin}" y1="{height - margin}" x2="{width - margin}" '
        f'y2="{height - margin}" stroke="black"/>',
        f'<line x1="{margin}" y1="{margin}" x2="{margin}" y2="{height - margin}" stroke="black"/>',
    ]
    if rows:
        days = [r[1] for r in rows]
        gens = [r[2] for r in rows]
        d_lo, d_hi = min(days), max(days)
        g_hi = max(gens)
        d_span = max(d_hi - d_lo, 1)
        g_span = max(g_hi, 1)

        def sx(day: int) -> float:
            return margin + (day - d_lo) / d_span * (width - 2 * margin)

        def sy(gen: int) -> float:
            return height - margin - gen / g_span * (height - 2 * margin)

        for day in range(d_lo, d_hi + 1):
            parts.append(
                f'<text x="{sx(day):.1f}" y="{height - margin + 18}" font-size="10" '
                f'text-anchor="middle">{day}</text>'
            )
        for gen in range(0, g_hi + 1):
            parts.append(
                f'<text x="{margin - 8}" y="{sy(gen):.1f}" font-size="10" '
                f'text-anchor="end">{gen}</text>'
            )
        for uid, day, gen in rows:
            parts.append(
                f'<circle cx="{sx(day):.1f}" cy="{sy(gen):.1f}" r="4" fill="#1F77B4" '
                f'fill-opacity="0.75"><title>{_escape(uid)}</title></circle>'
            )
    else:
        parts.append(
            f'<text x="{width / 2:.0f}" y="{height / 2:.0f}" text-anchor="middle">no data</text>'
        )
    parts.append(
        f'<text x="{width / 2:.0f}" y="{height - 8}" font-size="12" '
        f'text-anchor="middle">arrival day</text>'
    )
    parts.append(
        f'<text x="14" y="{height / 2:.0f}" font-size="12" text-anchor="middle" '
        f'transform="rotate(-90 14 {height / 2:.0f})">generation</text>'
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def overlap_classes(
    tree_a: PathTree, tree_b: PathTree, day: int, node_ids
) -> dict[str, str]:
    """Classify every node by forward-path membership as of ``day``."""
    in_a = tree_a.reached(day)
    in_b = tree_b.reached(day)
    classes = {}
    for uid in node_ids:
        if uid in in_a and uid in in_b:
            classes[uid] = "both"
        elif uid in in_a:
            classes[uid] = "A_only"
        elif uid in in_b:
            classes[uid] = "B_only"
        else:
            classes[uid] = "neither"
    return classes


def tree_to_dict(tree: PathTree) -> dict:
    return {
        "root": tree.root,
        "direction": tree.direction,
        "start_day": tree.start_day,
        "mode": tree.mode,
        "entries": {
            uid: {
                "arrival": e.arrival,
                "generation": e.generation,
                "predecessor": e.predecessor,
            }
            for uid, e in sorted(tree.entries.items())
        },
    }


def tree_from_dict(raw: dict) -> PathTree:
    return PathTree(
        root=raw["root"],
        direction=raw["direction"],
        start_day=raw["start_day"],
        mode=raw["mode"],
        entries={
            uid: PathEntry(
                arrival=e["arrival"],
                generation=e["generation"],
                predecessor=e["predecessor"],
            )
            for uid, e in raw["entries"].items()
        },
    )


def write_trees(trees: list[PathTree], path: str | Path) -> None:
    Path(path).write_text(
        json.dumps({"trees": [tree_to_dict(t) for t in trees]}, indent=2, ensure_ascii=False)
        + "\n",
        encoding="utf-8",
    )


def read_trees(path: str | Path) -> list[PathTree]:
    raw = json.loads(Path(path).read_text(encoding="utf-8"))
    return [tree_from_dict(item) for item in raw["trees"]]
