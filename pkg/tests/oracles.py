"""Independent brute-force oracles for the census and overlay paths.

Everything here is written straight from the definitions, shares no
logic with the library internals, and favors obviousness over speed:
pair shapes fall out of endpoint coincidences on a 2-or-3-node set, and
enumeration filters the full combination space.
"""

from __future__ import annotations

import itertools
from collections import Counter

INF = float("inf")


def pair_label(u1, v1, u2, v2):
    """Shape of ordered arcs (u1,v1),(u2,v2); None when they share nothing.

    With two distinct non-loop arcs on 2 or 3 nodes exactly one endpoint
    coincidence holds, so no check-order assumptions are needed.
    """
    nodes = {u1, v1, u2, v2}
    if len(nodes) == 4:
        return None
    if len(nodes) == 2:
        return "R" if u1 == u2 else "P"
    if v1 == v2:
        return "I"
    if u1 == u2:
        return "O"
    if v1 == u2:
        return "C"
    if u1 == v2:
        return "W"
    return None


def _connected(arcs) -> bool:
    nodes = {n for arc in arcs for n in arc}
    if not nodes:
        return True
    seen = {next(iter(nodes))}
    frontier = list(seen)
    while frontier:
        cur = frontier.pop()
        for a, b in arcs:
            for x, y in ((a, b), (b, a)):
                if x == cur and y not in seen:
                    seen.add(y)
                    frontier.append(y)
    return seen == nodes


def qualifying_tuples(events, m, dc, dw):
    """All time-ordered m-tuples meeting the motif definition.

    events: sequence of (source, target, t) triples; dc/dw: numbers or
    INF. Applies every constraint literally: <= 3 nodes, connected,
    distinct timestamps, gap bound on consecutive node-sharing pairs,
    window bound.
    """
    ordered = sorted(events, key=lambda e: (e[2], e[0], e[1]))
    for combo in itertools.combinations(ordered, m):
        ts = [e[2] for e in combo]
        if len(set(ts)) != m:
            continue
        nodes = {n for e in combo for n in (e[0], e[1])}
        if len(nodes) > 3:
            continue
        arcs = [(e[0], e[1]) for e in combo]
        if not _connected(arcs):
            continue
        ok = True
        for first, second in zip(combo, combo[1:]):
            shares = {first[0], first[1]} & {second[0], second[1]}
            if shares and second[2] - first[2] > dc:
                ok = False
                break
        if not ok:
            continue
        if ts[-1] - ts[0] > dw:
            continue
        yield combo


def tuple_label(combo):
    labels = [
        pair_label(a[0], a[1], b[0], b[1]) for a, b in zip(combo, combo[1:])
    ]
    if any(lab is None for lab in labels):
        return None
    return labels[0] if len(combo) == 2 else "-".join(labels)


def brute_census(events, m, dc, dw) -> Counter:
    """Counter of class label -> count over all qualifying tuples."""
    counts: Counter = Counter()
    for combo in qualifying_tuples(events, m, dc, dw):
        label = tuple_label(combo)
        assert label is not None, "qualifying tuple must classify"
        counts[label] += 1
    return counts


def brute_static_census(edges) -> Counter:
    """Counts over all unordered pairs of distinct directed edges."""
    counts: Counter = Counter()
    for (a, b), (c, d) in itertools.combinations(sorted(edges), 2):
        if {a, b} == {c, d}:
            counts["mutual"] += 1
        elif b == d:
            counts["in-burst"] += 1
        elif a == c:
            counts["out-burst"] += 1
        elif b == c or d == a:
            counts["path"] += 1
    return counts


def brute_overlay(instance_nodes, t_first, t_last, collab_events, pad):
    """Cross-product filter: collaborations landing on one motif instance.

    collab_events: (a, b, t) triples; returns the set of matches as
    (frozenset endpoints, t).
    """
    hits = set()
    for a, b, t in collab_events:
        if a in instance_nodes and b in instance_nodes:
            if t_first - pad <= t <= t_last + pad:
                hits.add((frozenset((a, b)), t))
    return hits
