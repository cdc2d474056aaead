"""Independent brute-force reference implementations for tests.

These are deliberately written as label-correcting fixpoint iterations
over raw spell tuples (a different algorithmic route than the package's
label-setting traversal) so the two can check each other.
"""

from datetime import date

from chatternet.network import NodeProfile
from chatternet.temporal import DyadEdge, DyadSpell, NodeEntry, TemporalNetwork

INF = 10**9


def net_from_spells(spells, users=(), window=4):
    """Build a TemporalNetwork from (u, v, onset, terminus, from_user)
    tuples; node intervals are irrelevant for traversal tests."""
    grouped = {}
    for i, (u, v, onset, terminus, from_user) in enumerate(spells):
        key = (u, v) if u < v else (v, u)
        grouped.setdefault(key, []).append(
            DyadSpell(
                onset=onset,
                terminus=terminus,
                from_user=from_user,
                to_user=v if from_user == u else u,
                edge_type="mention",
                text="",
                sentiment=0.0,
                keyword_flag=0,
                tweet_id=f"s{i}",
            )
        )
    edges = [
        DyadEdge(u=u, v=v, spells=tuple(sorted(items, key=lambda s: (s.onset, s.tweet_id))))
        for (u, v), items in sorted(grouped.items())
    ]
    ids = set(users)
    for u, v, *_ in spells:
        ids |= {u, v}
    nodes = {uid: NodeEntry(profile=NodeProfile(user_id=uid), intervals=[]) for uid in sorted(ids)}
    horizon = max((t for _, _, _, t, _ in spells), default=0)
    return TemporalNetwork(
        epoch=date(2023, 3, 15), window=window, horizon=horizon, nodes=nodes, edges=edges
    )


def oracle_forward(spells, root, start, mode="undirected"):
    """Earliest arrivals by fixpoint relaxation over all spells."""
    arrival = {root: start}
    changed = True
    while changed:
        changed = False
        for u, v, onset, terminus, from_user in spells:
            for a, b in ((u, v), (v, u)):
                if mode == "directed" and from_user != a:
                    continue
                if a not in arrival:
                    continue
                depart = max(arrival[a], onset)
                if depart <= terminus and depart < arrival.get(b, INF):
                    arrival[b] = depart
                    changed = True
    return arrival


def oracle_backward(spells, root, end, mode="undirected"):
    """Latest departures by fixpoint relaxation under time reversal."""
    departure = {root: end}
    changed = True
    while changed:
        changed = False
        for u, v, onset, terminus, from_user in spells:
            for a, b in ((u, v), (v, u)):
                # a sends to b, which is already on a path to the root
                if mode == "directed" and from_user != a:
                    continue
                if b not in departure:
                    continue
                limit = min(departure[b], terminus)
                if limit >= onset and limit > departure.get(a, -INF):
                    departure[a] = limit
                    changed = True
    return departure


def random_spells(rng, max_nodes=12, max_spells=25):
    n_nodes = rng.randint(2, max_nodes)
    users = [f"n{i:02d}" for i in range(n_nodes)]
    spells = []
    for _ in range(rng.randint(1, max_spells)):
        u, v = rng.sample(users, 2)
        onset = rng.randint(0, 15)
        terminus = onset + rng.randint(0, 5)
        from_user = rng.choice([u, v])
        spells.append((min(u, v), max(u, v), onset, terminus, from_user))
    return users, spells
