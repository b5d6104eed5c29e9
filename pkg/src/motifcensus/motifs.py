"""Temporal motif taxonomy, enumeration, census, and static projections.

A motif candidate is a strictly time-ordered event sequence on at most
three nodes in which consecutive events share a node within the gap
bound and the whole sequence fits in the window bound. Two-event motifs
are labeled by the shape of the pair; three-event motifs by the pair of
consecutive shapes. The full three-event taxonomy is generated from the
pair classifier rather than written out by hand.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Mapping

import numpy as np

from . import _kernels
from .errors import ClassificationError, ValidationError
from .events import Event, TemporalLayer


class PairClass(Enum):
    """Shape of a time-ordered event pair sharing at least one node.

    R repeats an arc, P reverses it, I points two sources at one target,
    O points one source at two targets, C continues a path through the
    first target, W starts a new arc into the first source.
    """

    REPETITION = "R"
    PING_PONG = "P"
    IN_BURST = "I"
    OUT_BURST = "O"
    CONVEY = "C"
    WEAK = "W"

    def __str__(self) -> str:
        return self.value


PAIR_CLASSES: tuple[PairClass, ...] = tuple(PairClass)
PAIR_LABELS: tuple[str, ...] = tuple(str(c) for c in PAIR_CLASSES)
_PAIR_INDEX: dict[PairClass, int] = {c: i for i, c in enumerate(PAIR_CLASSES)}

TWO_NODE = "two-node"
WEDGE = "wedge"
ACYCLIC_TRIANGLE = "acyclic-triangle"
CYCLIC_TRIANGLE = "cyclic-triangle"


def _classify_arcs(u1: object, v1: object, u2: object, v2: object) -> int:
    """Pair-class index for ordered arcs (u1,v1) then (u2,v2); -1 if disjoint.

    Check order matters: the two-node cases must win before the shared
    single-endpoint cases, and shared-target/shared-source before the
    path cases.
    """
    if u1 == u2 and v1 == v2:
        return 0
    if u1 == v2 and v1 == u2:
        return 1
    if v1 == v2:
        return 2
    if u1 == u2:
        return 3
    if v1 == u2:
        return 4
    if u1 == v2:
        return 5
    return -1


def classify_pair(first: Event, second: Event) -> PairClass:
    """Classify a strictly time-ordered event pair that shares a node."""
    if first.t >= second.t:
        raise ClassificationError("pair events must have strictly increasing timestamps")
    code = _classify_arcs(first.source, first.target, second.source, second.target)
    if code < 0:
        raise ClassificationError("pair events share no node")
    return PAIR_CLASSES[code]


@dataclass(frozen=True)
class TripleClass:
    """One of the 36 three-event motif classes, labeled "first-second"."""

    first: PairClass
    second: PairClass
    node_count: int
    category: str

    @property
    def label(self) -> str:
        return f"{self.first}-{self.second}"

    def __str__(self) -> str:
        return self.label


# Canonical arcs realizing each pair class, on integer nodes 0/1/2 with
# event times 0 then 1. Used only to generate the triple taxonomy.
_CANONICAL_PAIR: dict[PairClass, tuple[tuple[int, int], tuple[int, int]]] = {
    PairClass.REPETITION: ((0, 1), (0, 1)),
    PairClass.PING_PONG: ((0, 1), (1, 0)),
    PairClass.IN_BURST: ((0, 2), (1, 2)),
    PairClass.OUT_BURST: ((0, 1), (0, 2)),
    PairClass.CONVEY: ((0, 1), (1, 2)),
    PairClass.WEAK: ((0, 1), (2, 0)),
}


def _is_directed_cycle(arcs: Iterable[tuple[int, int]]) -> bool:
    succ: dict[int, int] = {}
    for u, v in arcs:
        if u in succ:
            return False
        succ[u] = v
    start = next(iter(succ))
    cur: int | None = start
    for _ in range(len(succ)):
        cur = succ.get(cur)  # type: ignore[arg-type]
        if cur is None:
            return False
    return cur == start


def canonical_triple_arcs(
    first: PairClass, second: PairClass
) -> tuple[tuple[int, int], tuple[int, int], tuple[int, int]]:
    """The unique arc sequence on nodes {0,1,2} realizing (first, second).

    The third arc is found by search: given the canonical first pair,
    exactly one ordered node pair classifies against the second event as
    ``second``. Uniqueness is asserted, not assumed.
    """
    e1, e2 = _CANONICAL_PAIR[first]
    want = _PAIR_INDEX[second]
    candidates = [
        (a, b)
        for a, b in itertools.permutations(range(3), 2)
        if _classify_arcs(e2[0], e2[1], a, b) == want
    ]
    if len(candidates) != 1:
        raise ValidationError(
            f"taxonomy generation found {len(candidates)} arcs for {first}-{second}"
        )
    return (e1, e2, candidates[0])


def _build_triple_classes() -> tuple[TripleClass, ...]:
    classes = []
    for first in PAIR_CLASSES:
        for second in PAIR_CLASSES:
            arcs = canonical_triple_arcs(first, second)
            nodes = {n for arc in arcs for n in arc}
            undirected = {frozenset(arc) for arc in arcs}
            if len(nodes) == 2:
                category = TWO_NODE
            elif len(undirected) < 3:
                category = WEDGE
            elif _is_directed_cycle(arcs):
                category = CYCLIC_TRIANGLE
            else:
                category = ACYCLIC_TRIANGLE
            classes.append(TripleClass(first, second, len(nodes), category))
    return tuple(classes)


TRIPLE_CLASSES: tuple[TripleClass, ...] = _build_triple_classes()
TRIPLE_LABELS: tuple[str, ...] = tuple(c.label for c in TRIPLE_CLASSES)
TRIPLE_BY_PAIR: Mapping[tuple[PairClass, PairClass], TripleClass] = {
    (c.first, c.second): c for c in TRIPLE_CLASSES
}


def class_labels(m: int) -> tuple[str, ...]:
    """Canonical label order for the m-event census (m in {2, 3})."""
    _require_m(m)
    return PAIR_LABELS if m == 2 else TRIPLE_LABELS


def classify_triple(first: Event, second: Event, third: Event) -> TripleClass:
    """Classify a strictly time-ordered three-event sequence on <= 3 nodes."""
    if not (first.t < second.t < third.t):
        raise ClassificationError("triple events must have strictly increasing timestamps")
    nodes = {first.source, first.target, second.source, second.target, third.source, third.target}
    if len(nodes) > 3:
        raise ClassificationError("triple spans more than three nodes")
    return TRIPLE_BY_PAIR[(classify_pair(first, second), classify_pair(second, third))]


UNBOUNDED: int | None = None


@dataclass(frozen=True, slots=True)
class Thresholds:
    """Gap bound between consecutive events and total window bound, in days.

    None means unbounded. When both are finite the gap bound must not
    exceed the window bound (a larger one could never bind).
    """

    delta_c: int | None = None
    delta_w: int | None = None

    def __post_init__(self) -> None:
        for name, value in (("delta_c", self.delta_c), ("delta_w", self.delta_w)):
            if value is not None and (not isinstance(value, int) or value < 0):
                raise ValidationError(f"{name} must be a non-negative int or None")
        if (
            self.delta_c is not None
            and self.delta_w is not None
            and self.delta_c > self.delta_w
        ):
            raise ValidationError("delta_c must not exceed delta_w")


def pair_roles(cls: PairClass, first: Event, second: Event) -> dict[str, str]:
    """Node roles of a two-event motif, keyed by position label."""
    if cls in (PairClass.REPETITION, PairClass.PING_PONG):
        return {"first-source": first.source, "first-target": first.target}
    if cls is PairClass.IN_BURST:
        return {
            "first-opposer": first.source,
            "second-opposer": second.source,
            "opposed": first.target,
        }
    if cls is PairClass.OUT_BURST:
        return {
            "opposer": first.source,
            "first-opposed": first.target,
            "second-opposed": second.target,
        }
    if cls is PairClass.CONVEY:
        return {
            "first-source": first.source,
            "center": first.target,
            "second-target": second.target,
        }
    return {
        "center": first.source,
        "first-target": first.target,
        "second-source": second.source,
    }


def triple_roles(events: tuple[Event, Event, Event]) -> dict[str, str]:
    """Node roles of a three-event motif: order of first appearance."""
    seen: dict[str, str] = {}
    for e in events:
        for node in e.edge:
            if node not in seen:
                seen[node] = f"node-{len(seen)}"
    return {role: node for node, role in seen.items()}


@dataclass(frozen=True)
class MotifInstance:
    """A concrete motif occurrence: its events, class, and node roles."""

    events: tuple[Event, ...]
    motif_class: PairClass | TripleClass
    roles: Mapping[str, str]

    @property
    def label(self) -> str:
        return str(self.motif_class)

    @property
    def node_set(self) -> frozenset[str]:
        return frozenset(self.roles.values())

    @property
    def t_first(self) -> int:
        return self.events[0].t

    @property
    def t_last(self) -> int:
        return self.events[-1].t


def _require_m(m: int) -> None:
    if m not in (2, 3):
        raise ValidationError(f"motif size must be 2 or 3, got {m}")


def _require_directed(layer: TemporalLayer) -> None:
    if not layer.directed:
        raise ValidationError("motif analysis runs on the directed layer")


def _make_instance(events: tuple[Event, ...]) -> MotifInstance:
    if len(events) == 2:
        cls2 = classify_pair(events[0], events[1])
        return MotifInstance(events, cls2, pair_roles(cls2, events[0], events[1]))
    cls3 = classify_triple(*events)
    return MotifInstance(events, cls3, triple_roles(events))  # type: ignore[arg-type]


def enumerate_motifs(
    layer: TemporalLayer, m: int, thresholds: Thresholds
) -> Iterator[MotifInstance]:
    """Yield every motif instance, ordered by event positions.

    Pure-Python reference path; census() runs the same recurrence in a
    compiled kernel. The two are cross-checked in the test suite.
    """
    _require_m(m)
    _require_directed(layer)
    events = layer.events
    if len(events) < m:
        return
    incident: dict[str, list[int]] = {}
    for i, e in enumerate(events):
        incident.setdefault(e.source, []).append(i)
        incident.setdefault(e.target, []).append(i)
    times = [e.t for e in events]
    big = (1 << 62)
    dc = big if thresholds.delta_c is None else thresholds.delta_c
    dw = big if thresholds.delta_w is None else thresholds.delta_w

    def successors(pos: int, nodes: tuple[str, ...], limit: int) -> list[int]:
        """Event positions after pos touching any of nodes, with t - t[pos] <= limit."""
        t0 = times[pos]
        out: set[int] = set()
        for node in nodes:
            lst = incident.get(node, ())
            # first strictly-later timestamp; ties are not successors
            lo, hi = 0, len(lst)
            while lo < hi:
                mid = (lo + hi) // 2
                if times[lst[mid]] <= t0:
                    lo = mid + 1
                else:
                    hi = mid
            for p in range(lo, len(lst)):
                j = lst[p]
                if times[j] - t0 > limit:
                    break
                out.add(j)
        return sorted(out)

    for i, e1 in enumerate(events):
        for j in successors(i, e1.edge, min(dc, dw)):
            e2 = events[j]
            if m == 2:
                yield _make_instance((e1, e2))
                continue
            nodes = tuple(dict.fromkeys((*e1.edge, *e2.edge)))
            limit2 = min(dc, times[i] + dw - times[j])
            for k in successors(j, nodes, limit2):
                e3 = events[k]
                if len(set(nodes) | set(e3.edge)) > 3:
                    continue
                yield _make_instance((e1, e2, e3))


@dataclass(frozen=True)
class CensusResult:
    """Counts per motif class for one thresholds setting (and optional bin)."""

    m: int
    thresholds: Thresholds
    counts: Mapping[str, int]
    bin_edges: tuple[int, int] | None = None
    bin_mode: str | None = None

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def census(
    layer: TemporalLayer,
    m: int,
    thresholds: Thresholds,
    threads: int | None = None,
) -> CensusResult:
    """Count motif instances per class with the compiled kernel.

    ``threads`` above the hardware/runtime limit is clamped; counts are
    identical for every thread count because each anchor event owns one
    output row and rows are summed after the parallel region.
    """
    _require_m(m)
    _require_directed(layer)
    labels = class_labels(m)
    if len(layer.events) < m:
        return CensusResult(m, thresholds, {lab: 0 for lab in labels})
    raw = _kernels.census_counts(layer, m, thresholds.delta_c, thresholds.delta_w, threads)
    return CensusResult(m, thresholds, {lab: int(n) for lab, n in zip(labels, raw)})


GAP_BINNED = "gap"
WINDOW_BINNED = "window"


def binned_census(
    layer: TemporalLayer,
    m: int,
    boundaries: Iterable[int],
    mode: str = GAP_BINNED,
    threads: int | None = None,
) -> list[CensusResult]:
    """Census per threshold bin, as differences of cumulative censuses.

    Boundaries must be positive and strictly ascending; bin i covers
    (b[i-1], b[i]] with b[-1] = 0. Gap mode bins by the largest
    consecutive gap at window = last boundary; window mode bins by total
    window with gap unbounded below the window. Differences are exact
    because each instance lands in exactly one bin.
    """
    edges = [int(b) for b in boundaries]
    if not edges:
        raise ValidationError("need at least one bin boundary")
    if edges[0] <= 0 or any(a >= b for a, b in zip(edges, edges[1:])):
        raise ValidationError("bin boundaries must be positive and strictly ascending")
    if mode not in (GAP_BINNED, WINDOW_BINNED):
        raise ValidationError(f"unknown bin mode {mode!r}")
    top = edges[-1]
    cumulative = []
    for b in edges:
        th = Thresholds(b, top) if mode == GAP_BINNED else Thresholds(b, b)
        cumulative.append(census(layer, m, th, threads))
    labels = class_labels(m)
    results = []
    prev: Mapping[str, int] = {lab: 0 for lab in labels}
    lo = 0
    for b, cum in zip(edges, cumulative):
        counts = {lab: cum.counts[lab] - prev[lab] for lab in labels}
        results.append(
            CensusResult(m, cum.thresholds, counts, bin_edges=(lo, b), bin_mode=mode)
        )
        prev = cum.counts
        lo = b
    return results


MUTUAL = "mutual"
STATIC_IN_BURST = "in-burst"
STATIC_OUT_BURST = "out-burst"
PATH = "path"
STATIC_CLASSES: tuple[str, ...] = (MUTUAL, STATIC_IN_BURST, STATIC_OUT_BURST, PATH)


@dataclass(frozen=True)
class StaticGraph:
    """Directed simple graph left after dropping timestamps and multiplicity."""

    nodes: frozenset[str]
    edges: frozenset[tuple[str, str]]


def static_projection(layer: TemporalLayer) -> StaticGraph:
    _require_directed(layer)
    return StaticGraph(nodes=layer.nodes, edges=frozenset(layer.edge_index))


def _adjacency(graph: StaticGraph) -> tuple[dict[str, set[str]], dict[str, set[str]]]:
    preds: dict[str, set[str]] = {}
    succs: dict[str, set[str]] = {}
    for u, v in graph.edges:
        succs.setdefault(u, set()).add(v)
        preds.setdefault(v, set()).add(u)
    return preds, succs


def static_census(graph: StaticGraph) -> dict[str, int]:
    """Counts of the four two-edge static patterns.

    mutual: unordered pairs with both arcs; in-burst: unordered source
    pairs at a shared target; out-burst: unordered target pairs from a
    shared source; path: arc pairs a->b->c with a != c (mutual pairs are
    not paths).
    """
    preds, succs = _adjacency(graph)
    mutual = sum(1 for u, v in graph.edges if u < v and (v, u) in graph.edges)
    in_burst = sum(len(ps) * (len(ps) - 1) // 2 for ps in preds.values())
    out_burst = sum(len(ss) * (len(ss) - 1) // 2 for ss in succs.values())
    path = sum(
        len(preds.get(b, ())) * len(succs.get(b, ()))
        - len(preds.get(b, set()) & succs.get(b, set()))
        for b in graph.nodes
    )
    return {MUTUAL: mutual, STATIC_IN_BURST: in_burst, STATIC_OUT_BURST: out_burst, PATH: path}


def enumerate_static_instances(
    graph: StaticGraph,
) -> Iterator[tuple[str, dict[str, tuple[str, ...]]]]:
    """Yield (pattern, positions) for every static instance, deterministically.

    Positions map a position label to the nodes filling it; burst leaves
    share one label since they are exchangeable.
    """
    preds, succs = _adjacency(graph)
    for u, v in sorted(graph.edges):
        if u < v and (v, u) in graph.edges:
            yield MUTUAL, {"node": (u, v)}
    for center in sorted(preds):
        for a, b in itertools.combinations(sorted(preds[center]), 2):
            yield STATIC_IN_BURST, {"center": (center,), "leaf": (a, b)}
    for center in sorted(succs):
        for a, b in itertools.combinations(sorted(succs[center]), 2):
            yield STATIC_OUT_BURST, {"center": (center,), "leaf": (a, b)}
    for center in sorted(graph.nodes):
        for a in sorted(preds.get(center, ())):
            for c in sorted(succs.get(center, ())):
                if a != c:
                    yield PATH, {"source": (a,), "center": (center,), "sink": (c,)}
