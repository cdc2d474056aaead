"""Per-slice layouts, visual encodings, and animation export.

Layouts are force-directed with warm starts: each slice begins from the
previous slice's positions so motion stays continuous, and new nodes
enter on a seed-derived jittered circle. Everything here is deterministic
given (network, days, seed); no wall-clock, no global RNG.
"""

from __future__ import annotations

import hashlib
import json
import logging
import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np

from .paths import PathTree, overlap_classes
from .temporal import SliceGraph, TemporalNetwork, slice_at

log = logging.getLogger(__name__)

DOC_VERSION = 1

SENTIMENT_NEGATIVE = (255, 0, 0)
SENTIMENT_NEUTRAL = (255, 255, 0)
SENTIMENT_POSITIVE = (0, 255, 0)
KEYWORD_ON = "#FF0000"
INACTIVE_GREY = "#C0C0C0"
EDGE_GREY = "#B0B0B0"
PATH_COLORS = {"A_only": "#FF0000", "B_only": "#0000FF", "both": "#800080", "neither": INACTIVE_GREY}
TEAM_SHAPES = {"musk": "triangle", "openai": "square"}

SCHEMES = ("sentiment", "keyword", "path")


@dataclass(frozen=True)
class LayoutParams:
    iterations: int = 300
    cold_temperature: float = 0.2
    warm_temperature: float = 0.02
    margin: float = 0.05


def _circle_seed(seed: int, node_id: str) -> tuple[float, float]:
    digest = hashlib.sha256(f"{seed}:{node_id}".encode("utf-8")).digest()
    u1 = int.from_bytes(digest[0:8], "big") / 2**64
    u2 = int.from_bytes(digest[8:16], "big") / 2**64
    angle = 2.0 * math.pi * u1
    radius = 1.0 + 0.15 * (u2 - 0.5)
    return (radius * math.cos(angle), radius * math.sin(angle))


def _fr_relax(
    positions: np.ndarray, edge_index: list[tuple[int, int]], iterations: int, t0: float
) -> np.ndarray:
    n = len(positions)
    if n <= 1:
        return positions
    k = math.sqrt(4.0 / n)
    pos = positions.copy()
    src = np.array([e[0] for e in edge_index], dtype=int)
    dst = np.array([e[1] for e in edge_index], dtype=int)
    for step in range(iterations):
        t = t0 * (1.0 - step / iterations)
        delta = pos[:, None, :] - pos[None, :, :]
        dist = np.sqrt((delta**2).sum(axis=-1))
        np.fill_diagonal(dist, 1.0)
        dist = np.maximum(dist, 1e-9)
        disp = (delta / dist[..., None] * (k * k / dist**2)[..., None]).sum(axis=1)
        if len(src):
            dvec = pos[src] - pos[dst]
            d = np.maximum(np.sqrt((dvec**2).sum(axis=-1)), 1e-9)
            pull = dvec * (d / k)[:, None]
            np.subtract.at(disp, src, pull)
            np.add.at(disp, dst, pull)
        length = np.maximum(np.sqrt((disp**2).sum(axis=-1)), 1e-9)
        pos = pos + disp / length[:, None] * np.minimum(length, t)[:, None]
    return pos


def layout_sequence(
    net: TemporalNetwork,
    days: list[int],
    seed: int,
    params: LayoutParams = LayoutParams(),
) -> dict[int, dict[str, tuple[float, float]]]:
    """Positions per day for every node active that day, normalized onto
    the unit square with a small margin."""
    carried: dict[str, tuple[float, float]] = {}
    raw: dict[int, dict[str, tuple[float, float]]] = {}
    for day in days:
        graph = slice_at(net, day)
        ids = [n.user_id for n in graph.nodes]
        if not ids:
            raw[day] = {}
            continue
        index = {uid: i for i, uid in enumerate(ids)}
        warm = any(uid in carried for uid in ids)
        start = np.array(
            [carried.get(uid, _circle_seed(seed, uid)) for uid in ids], dtype=float
        )
        edge_index = [(index[e.u], index[e.v]) for e in graph.edges]
        t0 = params.warm_temperature if warm else params.cold_temperature
        relaxed = _fr_relax(start, edge_index, params.iterations, t0)
        raw[day] = {uid: (float(relaxed[i][0]), float(relaxed[i][1])) for uid, i in index.items()}
        carried.update(raw[day])
    return _normalize_sequence(raw, params.margin)


def _normalize_sequence(
    sequence: dict[int, dict[str, tuple[float, float]]], margin: float
) -> dict[int, dict[str, tuple[float, float]]]:
    xs = [p[0] for day in sequence.values() for p in day.values()]
    ys = [p[1] for day in sequence.values() for p in day.values()]
    if not xs:
        return sequence
    x_lo, x_hi, y_lo, y_hi = min(xs), max(xs), min(ys), max(ys)
    span = max(x_hi - x_lo, y_hi - y_lo, 1e-9)
    scale = (1.0 - 2.0 * margin) / span
    x_pad = (1.0 - 2.0 * margin - (x_hi - x_lo) * scale) / 2.0
    y_pad = (1.0 - 2.0 * margin - (y_hi - y_lo) * scale) / 2.0
    return {
        day: {
            uid: (
                margin + x_pad + (x - x_lo) * scale,
                margin + y_pad + (y - y_lo) * scale,
            )
            for uid, (x, y) in positions.items()
        }
        for day, positions in sequence.items()
    }


def _lerp_color(a: tuple[int, int, int], b: tuple[int, int, int], t: float) -> str:
    channels = [round(a[i] + (b[i] - a[i]) * t) for i in range(3)]
    return "#{:02X}{:02X}{:02X}".format(*channels)


def sentiment_color(sentiment: float) -> str:
    """Diverging negative-red to neutral-yellow to positive-green map,
    monotone per channel; 0.0 hits the neutral color exactly."""
    s = max(-1.0, min(1.0, sentiment))
    if s < 0:
        return _lerp_color(SENTIMENT_NEGATIVE, SENTIMENT_NEUTRAL, s + 1.0)
    return _lerp_color(SENTIMENT_NEUTRAL, SENTIMENT_POSITIVE, s)


def degree_size(
    degree: int, degree_range: tuple[int, int], size_range: tuple[float, float] = (0.3, 1.3)
) -> float:
    """Affine map from the whole-horizon degree range onto the size range;
    a degenerate degree range collapses every node to the minimum size."""
    d_lo, d_hi = degree_range
    s_lo, s_hi = size_range
    if d_hi <= d_lo:
        return s_lo
    clamped = min(max(degree, d_lo), d_hi)
    return s_lo + (s_hi - s_lo) * (clamped - d_lo) / (d_hi - d_lo)


def node_shape(team: str) -> str:
    return TEAM_SHAPES.get(team, "circle")


def global_degree_range(net: TemporalNetwork) -> tuple[int, int]:
    degrees = [iv.degree for entry in net.nodes.values() for iv in entry.intervals]
    if not degrees:
        return (0, 0)
    return (min(degrees), max(degrees))


def encode_visuals(
    graph: SliceGraph,
    scheme: str,
    positions: dict[str, tuple[float, float]],
    degree_range: tuple[int, int],
    size_range: tuple[float, float] = (0.3, 1.3),
    overlap: dict[str, str] | None = None,
) -> dict:
    """Style one slice: color by the chosen scheme, shape by team, size by
    degree over the whole-horizon range, tooltips from profiles/tweets."""
    if scheme not in SCHEMES:
        raise ValueError(f"unknown scheme {scheme!r}")
    if scheme == "path" and overlap is None:
        raise ValueError("path scheme needs overlap classes")
    nodes = []
    for item in graph.nodes:
        profile, interval = item.profile, item.interval
        if scheme == "sentiment":
            color = sentiment_color(interval.mean_sentiment)
        elif scheme == "keyword":
            color = KEYWORD_ON if interval.keyword_any else INACTIVE_GREY
        else:
            color = PATH_COLORS[overlap.get(item.user_id, "neither")]
        x, y = positions[item.user_id]
        tooltip = f"@{profile.handle} ({profile.display_name}): {profile.description}"
        if profile.location:
            tooltip += f" [{profile.location}]"
        nodes.append(
            {
                "id": item.user_id,
                "x": round(x, 6),
                "y": round(y, 6),
                "size": round(degree_size(interval.degree, degree_range, size_range), 6),
                "color": color,
                "shape": node_shape(profile.team),
                "tooltip": tooltip,
            }
        )
    edges = []
    for item in graph.edges:
        spell = item.spell
        if scheme == "sentiment":
            color = sentiment_color(spell.sentiment)
        elif scheme == "keyword":
            color = KEYWORD_ON if spell.keyword_flag else EDGE_GREY
        else:
            color = EDGE_GREY
        edges.append(
            {
                "u": item.u,
                "v": item.v,
                "color": color,
                "width": 1.0,
                "tooltip": f"{spell.text} (sentiment {spell.sentiment:+.3f}, {spell.edge_type})",
            }
        )
    return {"day": graph.day, "nodes": nodes, "edges": edges}


def build_animation_doc(
    net: TemporalNetwork,
    days: list[int],
    seed: int,
    scheme: str = "sentiment",
    size_range: tuple[float, float] = (0.3, 1.3),
    path_trees: tuple[PathTree, PathTree] | None = None,
    layout_params: LayoutParams = LayoutParams(),
) -> dict:
    positions = layout_sequence(net, days, seed, layout_params)
    degree_range = global_degree_range(net)
    slices = []
    for day in days:
        graph = slice_at(net, day)
        overlap = None
        if scheme == "path":
            if path_trees is None:
                raise ValueError("path scheme needs two path trees")
            overlap = overlap_classes(path_trees[0], path_trees[1], day, net.nodes.keys())
        slices.append(
            encode_visuals(graph, scheme, positions[day], degree_range, size_range, overlap)
        )
    return {
        "version": DOC_VERSION,
        "meta": {
            "epoch": net.epoch.isoformat(),
            "days": list(days),
            "scheme": scheme,
            "size_range": list(size_range),
            "degree_range": list(degree_range),
            "encodings": (
                "node color: {} | shape: team (triangle/square/circle) | "
                "size: degree scaled {}..{} over whole-horizon degree range {}..{}".format(
                    scheme, size_range[0], size_range[1], degree_range[0], degree_range[1]
                )
            ),
        },
        "slices": slices,
    }


def default_player_bundle() -> Path | None:
    candidate = Path(str(resources.files("chatternet").joinpath("assets", "player.js")))
    return candidate if candidate.is_file() else None


def export_animation(
    doc: dict, out_dir: str | Path, player_bundle: str | Path | None = None
) -> list[Path]:
    """Write animation.json, per-slice SVGs, and (when the player bundle
    asset is present) a self-contained index.html."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []

    doc_json = json.dumps(doc, indent=2, ensure_ascii=False)
    json_path = out_dir / "animation.json"
    json_path.write_text(doc_json + "\n", encoding="utf-8")
    written.append(json_path)

    for item in doc["slices"]:
        svg_path = out_dir / f"slice_{item['day']}.svg"
        svg_path.write_text(slice_svg(item), encoding="utf-8")
        written.append(svg_path)

    bundle = Path(player_bundle) if player_bundle else default_player_bundle()
    if bundle is None or not bundle.is_file():
        log.warning("player bundle not available; skipping index.html (JSON+SVG only)")
        return written
    player_js = bundle.read_text(encoding="utf-8")
    html = _INDEX_TEMPLATE.format(
        data=doc_json.replace("</", "<\\/"), player=player_js.replace("</script>", "<\\/script>")
    )
    html_path = out_dir / "index.html"
    html_path.write_text(html, encoding="utf-8")
    written.append(html_path)
    return written


_INDEX_TEMPLATE = """<!DOCTYPE html>
<html>
<head>
<meta charset="utf-8">
<title>network animation</title>
<style>
  body {{ font-family: sans-serif; margin: 12px; background: #fafafa; }}
  #player-root {{ max-width: 860px; margin: 0 auto; }}
</style>
</head>
<body>
<div id="player-root"></div>
<script id="animation-data" type="application/json">
{data}
</script>
<script>
{player}
</script>
</body>
</html>
"""


def _svg_escape(text: str) -> str:
    return (
        text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;").replace('"', "&quot;")
    )


def _shape_svg(x: float, y: float, r: float, shape: str, color: str, tooltip: str) -> str:
    title = f"<title>{_svg_escape(tooltip)}</title>"
    if shape == "triangle":
        points = f"{x:.2f},{y - r:.2f} {x - 0.866 * r:.2f},{y + 0.5 * r:.2f} {x + 0.866 * r:.2f},{y + 0.5 * r:.2f}"
        return f'<polygon points="{points}" fill="{color}" stroke="#333" stroke-width="0.5">{title}</polygon>'
    if shape == "square":
        side = r * 1.8
        return (
            f'<rect x="{x - side / 2:.2f}" y="{y - side / 2:.2f}" width="{side:.2f}" '
            f'height="{side:.2f}" fill="{color}" stroke="#333" stroke-width="0.5">{title}</rect>'
        )
    return f'<circle cx="{x:.2f}" cy="{y:.2f}" r="{r:.2f}" fill="{color}" stroke="#333" stroke-width="0.5">{title}</circle>'


def slice_svg(slice_doc: dict, canvas: int = 800) -> str:
    """Static SVG rendering of one styled slice."""
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {canvas} {canvas}">',
        f'<rect width="{canvas}" height="{canvas}" fill="white"/>',
        f'<text x="12" y="20" font-size="14">day {slice_doc["day"]}</text>',
    ]
    index = {n["id"]: n for n in slice_doc["nodes"]}
    for edge in slice_doc["edges"]:
        a, b = index.get(edge["u"]), index.get(edge["v"])
        if a is None or b is None:
            continue
        parts.append(
            f'<line x1="{a["x"] * canvas:.2f}" y1="{a["y"] * canvas:.2f}" '
            f'x2="{b["x"] * canvas:.2f}" y2="{b["y"] * canvas:.2f}" '
            f'stroke="{edge["color"]}" stroke-width="{edge["width"]:.1f}" stroke-opacity="0.6">'
            f"<title>{_svg_escape(edge['tooltip'])}</title></line>"
        )
    for node in slice_doc["nodes"]:
        parts.append(
            _shape_svg(
                node["x"] * canvas,
                node["y"] * canvas,
                12.0 * node["size"],
                node["shape"],
                node["color"],
                node["tooltip"],
            )
        )
    if not slice_doc["nodes"]:
        parts.append(
            f'<text x="{canvas / 2:.0f}" y="{canvas / 2:.0f}" text-anchor="middle">no active nodes</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
