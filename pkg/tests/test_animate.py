import json
import logging
import math

import pytest
from hypothesis import given, strategies as st

from chatternet.animate import (
    LayoutParams,
    build_animation_doc,
    degree_size,
    encode_visuals,
    export_animation,
    layout_sequence,
    sentiment_color,
    slice_svg,
)
from chatternet.network import NodeProfile
from chatternet.paths import forward_path
from chatternet.temporal import build_network, slice_at

from conftest import mk_edge
from oracles import net_from_spells

HEX = set("0123456789ABCDEF")


def small_net():
    edges = [
        mk_edge(0, "A", "B", "t1"),
        mk_edge(1, "A", "C", "t2"),
        mk_edge(2, "B", "C", "t3"),
        mk_edge(6, "A", "B", "t4"),
    ]
    profiles = [
        NodeProfile(user_id="A", handle="a", display_name="Ay", team="musk"),
        NodeProfile(user_id="B", handle="b", display_name="Bee", team="openai"),
    ]
    return build_network(edges, profiles, window=4)


class TestLayout:
    def test_deterministic(self):
        net = small_net()
        days = list(range(net.horizon + 1))
        one = layout_sequence(net, days, seed=7)
        two = layout_sequence(net, days, seed=7)
        assert json.dumps(one, sort_keys=True) == json.dumps(two, sort_keys=True)

    def test_seed_changes_layout(self):
        net = small_net()
        assert layout_sequence(net, [0], seed=7) != layout_sequence(net, [0], seed=8)

    def test_empty_day(self):
        net = small_net()
        positions = layout_sequence(net, [net.horizon + 5], seed=7)
        assert positions == {net.horizon + 5: {}}

    def test_positions_finite_and_in_unit_square(self):
        net = small_net()
        positions = layout_sequence(net, list(range(net.horizon + 1)), seed=3)
        for day_positions in positions.values():
            for x, y in day_positions.values():
                assert math.isfinite(x) and math.isfinite(y)
                assert 0.0 <= x <= 1.0 and 0.0 <= y <= 1.0

    def test_stability_on_identical_slices(self):
        # Same active set on consecutive days: the warm-started layout must
        # barely move relative to the layout diameter.
        net = build_network(
            [mk_edge(0, "A", "B", "t1"), mk_edge(0, "B", "C", "t2"), mk_edge(0, "C", "D", "t3")],
            [],
            window=4,
        )
        positions = layout_sequence(net, [0, 1], seed=7)
        day0, day1 = positions[0], positions[1]
        xs = [p[0] for p in day0.values()]
        ys = [p[1] for p in day0.values()]
        diameter = max(
            math.hypot(max(xs) - min(xs), max(ys) - min(ys)), 1e-9
        )
        for uid in day0:
            drift = math.hypot(day1[uid][0] - day0[uid][0], day1[uid][1] - day0[uid][1])
            assert drift < 0.05 * diameter


class TestEncoding:
    def test_neutral_color_exact(self):
        assert sentiment_color(0.0) == "#FFFF00"

    def test_extreme_colors(self):
        assert sentiment_color(-1.0) == "#FF0000"
        assert sentiment_color(1.0) == "#00FF00"

    @given(st.floats(-1, 1), st.floats(-1, 1))
    def test_color_monotone_per_channel(self, s1, s2):
        if s1 > s2:
            s1, s2 = s2, s1
        c1, c2 = sentiment_color(s1), sentiment_color(s2)
        red1, green1 = int(c1[1:3], 16), int(c1[3:5], 16)
        red2, green2 = int(c2[1:3], 16), int(c2[3:5], 16)
        assert red1 >= red2
        assert green1 <= green2

    def test_size_endpoints_exact(self):
        assert degree_size(1, (1, 2879)) == 0.3
        assert degree_size(2879, (1, 2879)) == 1.3

    def test_size_linear_midpoint(self):
        assert degree_size(1440, (1, 2879)) == pytest.approx(0.8)

    def test_size_degenerate_range(self):
        assert degree_size(5, (5, 5)) == 0.3

    def test_size_monotone(self):
        sizes = [degree_size(d, (1, 100)) for d in range(1, 101)]
        assert sizes == sorted(sizes)

    def test_encode_totality_and_shapes(self):
        net = small_net()
        graph = slice_at(net, 1)
        positions = layout_sequence(net, [1], seed=7)[1]
        styled = encode_visuals(graph, "sentiment", positions, (1, 3))
        assert len(styled["nodes"]) == len(graph.nodes)
        for node in styled["nodes"]:
            assert set(node) == {"id", "x", "y", "size", "color", "shape", "tooltip"}
            assert node["color"].startswith("#") and set(node["color"][1:]) <= HEX
            assert node["shape"] in ("circle", "triangle", "square")
        shapes = {n["id"]: n["shape"] for n in styled["nodes"]}
        assert shapes["A"] == "triangle" and shapes["B"] == "square" and shapes["C"] == "circle"
        for edge in styled["edges"]:
            assert set(edge) == {"u", "v", "color", "width", "tooltip"}

    def test_keyword_scheme_colors(self):
        net = small_net()
        graph = slice_at(net, 0)
        positions = layout_sequence(net, [0], seed=7)[0]
        styled = encode_visuals(graph, "keyword", positions, (1, 3))
        assert {n["color"] for n in styled["nodes"]} <= {"#FF0000", "#C0C0C0"}

    def test_path_scheme_requires_overlap(self):
        net = small_net()
        graph = slice_at(net, 0)
        positions = layout_sequence(net, [0], seed=7)[0]
        with pytest.raises(ValueError):
            encode_visuals(graph, "path", positions, (1, 3))
        styled = encode_visuals(
            graph, "path", positions, (1, 3), overlap={"A": "A_only", "B": "both"}
        )
        colors = {n["id"]: n["color"] for n in styled["nodes"]}
        assert colors["A"] == "#FF0000" and colors["B"] == "#800080"

    def test_unknown_scheme_rejected(self):
        net = small_net()
        graph = slice_at(net, 0)
        with pytest.raises(ValueError):
            encode_visuals(graph, "rainbow", {}, (1, 3))


class TestDocAndExport:
    def test_doc_shape_and_determinism(self):
        net = small_net()
        days = list(range(net.horizon + 1))
        doc1 = build_animation_doc(net, days, seed=7)
        doc2 = build_animation_doc(net, days, seed=7)
        assert doc1 == doc2
        assert doc1["version"] == 1
        assert [s["day"] for s in doc1["slices"]] == days
        node_ids = set(net.nodes)
        for item in doc1["slices"]:
            assert {n["id"] for n in item["nodes"]} <= node_ids

    def test_path_scheme_doc(self):
        net = small_net()
        trees = (forward_path(net, "A", 0), forward_path(net, "B", 0))
        doc = build_animation_doc(net, [0, 1], seed=7, scheme="path", path_trees=trees)
        assert doc["meta"]["scheme"] == "path"

    def test_export_files(self, tmp_path):
        net = small_net()
        doc = build_animation_doc(net, [0, 1, 2], seed=7)
        written = export_animation(doc, tmp_path / "anim")
        names = {p.name for p in written}
        assert "animation.json" in names
        assert {"slice_0.svg", "slice_1.svg", "slice_2.svg"} <= names
        parsed = json.loads((tmp_path / "anim" / "animation.json").read_text(encoding="utf-8"))
        assert parsed == doc
        # serialize -> parse -> serialize is a fixpoint
        assert json.dumps(parsed, indent=2, ensure_ascii=False) == json.dumps(
            doc, indent=2, ensure_ascii=False
        )

    def test_export_without_player_bundle_downgrades(self, tmp_path, caplog):
        net = small_net()
        doc = build_animation_doc(net, [0], seed=7)
        with caplog.at_level(logging.WARNING):
            written = export_animation(doc, tmp_path / "anim", player_bundle=tmp_path / "missing.js")
        assert not (tmp_path / "anim" / "index.html").exists()
        assert any("player bundle" in r.message for r in caplog.records)
        assert (tmp_path / "anim" / "animation.json").exists()

    def test_export_empty_doc(self, tmp_path):
        doc = {"version": 1, "meta": {"days": []}, "slices": []}
        export_animation(doc, tmp_path / "anim", player_bundle=tmp_path / "missing.js")
        parsed = json.loads((tmp_path / "anim" / "animation.json").read_text(encoding="utf-8"))
        assert parsed["slices"] == []

    def test_slice_svg_contents(self):
        net = small_net()
        doc = build_animation_doc(net, [1], seed=7)
        svg = slice_svg(doc["slices"][0])
        assert "<polygon" in svg  # musk triangle
        assert "<rect" in svg and "<circle" in svg
        assert "viewBox" in svg

    def test_empty_slice_svg(self):
        svg = slice_svg({"day": 3, "nodes": [], "edges": []})
        assert "no active nodes" in svg
