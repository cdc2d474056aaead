import logging

import pytest
from hypothesis import given, strategies as st

from chatternet.network import (
    EDGELIST_COLUMNS,
    NODELIST_COLUMNS,
    NodeProfile,
    build_edgelist,
    build_nodelist,
    read_edgelist,
    read_nodelist,
    write_edgelist,
    write_nodelist,
)

from conftest import mk_record


class TestBuildEdgelist:
    def test_reply_with_overlapping_mention_deduped(self):
        rec = mk_record("t1", "A", reply="B", mentions=["B", "C"])
        edges = build_edgelist([rec])
        assert [(e.from_user, e.to_user, e.edge_type) for e in edges] == [
            ("A", "B", "reply"),
            ("A", "C", "mention"),
        ]

    def test_no_targets_no_edges(self):
        assert build_edgelist([mk_record("t1", "A")]) == []

    def test_retweet_edge(self):
        edges = build_edgelist([mk_record("t1", "A", retweet="B")])
        assert [(e.from_user, e.to_user, e.edge_type) for e in edges] == [("A", "B", "retweet")]

    def test_self_reply_dropped(self):
        assert build_edgelist([mk_record("t1", "A", reply="A")]) == []

    def test_stable_order(self):
        records = [
            mk_record("t2", "A", day=1, mentions=["C", "B"]),
            mk_record("t1", "A", day=0, reply="Z"),
            mk_record("t3", "A", day=1, hour=12, retweet="Q"),
        ]
        edges = build_edgelist(records)
        keys = [(e.created_at, e.tweet_id, e.to_user) for e in edges]
        assert keys == sorted(keys)

    def test_mention_per_target(self):
        rec = mk_record("t1", "A", mentions=["B", "C", "D"])
        assert len(build_edgelist([rec])) == 3


@st.composite
def small_records(draw):
    users = ["A", "B", "C", "D"]
    n = draw(st.integers(0, 8))
    records = []
    for i in range(n):
        author = draw(st.sampled_from(users))
        kind = draw(st.sampled_from(["none", "reply", "retweet"]))
        others = [u for u in users if u != author]
        mentions = draw(st.lists(st.sampled_from(others), max_size=2, unique=True))
        records.append(
            mk_record(
                f"t{i}",
                author,
                day=draw(st.integers(0, 3)),
                reply=draw(st.sampled_from(users)) if kind == "reply" else None,
                retweet=draw(st.sampled_from(users)) if kind == "retweet" else None,
                mentions=mentions,
            )
        )
    return records


@given(small_records())
def test_edge_count_bound_and_referential_completeness(records):
    edges = build_edgelist(records)
    bound = sum(
        (1 if (r.reply_to_user or r.retweet_of_user) else 0) + len(r.mentioned_users)
        for r in records
    )
    assert len(edges) <= bound
    nodelist = build_nodelist(edges)
    ids = {n.user_id for n in nodelist}
    assert ids == {e.from_user for e in edges} | {e.to_user for e in edges}
    assert len(ids) == len(nodelist)
    assert all(e.from_user != e.to_user for e in edges)


class TestBuildNodelist:
    def test_three_users(self):
        edges = build_edgelist(
            [mk_record("t1", "A", reply="B"), mk_record("t2", "B", reply="C")]
        )
        assert [n.user_id for n in build_nodelist(edges)] == ["A", "B", "C"]

    def test_empty(self):
        assert build_nodelist([]) == []

    def test_stub_profile(self):
        edges = build_edgelist([mk_record("t1", "A", reply="B")])
        stub = build_nodelist(edges)[0]
        assert stub.handle == "A" and not stub.verified and stub.followers_count == 0
        assert stub.team == "none"

    def test_team_overlay(self):
        edges = build_edgelist([mk_record("t1", "A", reply="B")])
        nodes = build_nodelist(edges, teams={"B": "musk"})
        assert {n.user_id: n.team for n in nodes} == {"A": "none", "B": "musk"}

    def test_team_for_absent_user_warns(self, caplog):
        edges = build_edgelist([mk_record("t1", "A", reply="B")])
        with caplog.at_level(logging.WARNING):
            nodes = build_nodelist(edges, teams={"Z": "openai"})
        assert len(nodes) == 2
        assert any("Z" in r.message for r in caplog.records)

    def test_unknown_team_rejected(self):
        edges = build_edgelist([mk_record("t1", "A", reply="B")])
        with pytest.raises(ValueError):
            build_nodelist(edges, teams={"A": "purple"})

    def test_negative_followers_rejected(self):
        with pytest.raises(ValueError):
            NodeProfile(user_id="A", followers_count=-1)


class TestCsvIO:
    def test_edgelist_round_trip_and_columns(self, tmp_path):
        edges = build_edgelist(
            [mk_record("t1", "A", reply="B", text='tricky, "text"'), mk_record("t2", "C", mentions=["A"])]
        )
        path = tmp_path / "edges.csv"
        write_edgelist(edges, path)
        header = path.read_text(encoding="utf-8").splitlines()[0]
        assert header == ",".join(EDGELIST_COLUMNS)
        assert read_edgelist(path) == edges

    def test_nodelist_round_trip_and_columns(self, tmp_path):
        profile = NodeProfile(
            user_id="A",
            handle="a_handle",
            display_name="A Person",
            description="desc",
            location="Lisbon",
            verified=True,
            followers_count=42,
            team="openai",
        )
        path = tmp_path / "nodes.csv"
        write_nodelist([profile], path)
        header = path.read_text(encoding="utf-8").splitlines()[0]
        assert header == ",".join(NODELIST_COLUMNS)
        assert read_nodelist(path) == [profile]
