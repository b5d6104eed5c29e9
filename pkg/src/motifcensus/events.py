"""Event model, file parsing, and the two-layer temporal network.

Timestamps are integer days since 1970-01-01 (negative before). The
opposition layer is directed (source opposes target); the collaboration
layer is undirected and stores each event with its endpoints in
lexicographic order.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from datetime import date
from typing import Iterable, Mapping, TextIO

from .errors import ParseError, ValidationError

OPPOSITION = "opposition"
COLLABORATION = "collaboration"

_EPOCH_ORDINAL = date(1970, 1, 1).toordinal()


def day_from_iso(text: str) -> int:
    """Days since 1970-01-01 for an ISO ``YYYY-MM-DD`` date string."""
    return date.fromisoformat(text).toordinal() - _EPOCH_ORDINAL


def iso_from_day(day: int) -> str:
    """Inverse of day_from_iso."""
    return date.fromordinal(day + _EPOCH_ORDINAL).isoformat()


@dataclass(frozen=True, slots=True)
class Event:
    """One time-stamped relation between two distinct companies.

    Collaboration events are undirected; the constructor normalizes their
    endpoint order so equal events compare equal. Opposition events keep
    source/target as given.
    """

    source: str
    target: str
    t: int
    layer: str = OPPOSITION

    def __post_init__(self) -> None:
        if self.layer not in (OPPOSITION, COLLABORATION):
            raise ValidationError(f"unknown layer {self.layer!r}")
        if not self.source or not self.target:
            raise ValidationError("empty node id")
        if self.source == self.target:
            raise ValidationError(f"self-relation on node {self.source!r}")
        if self.layer == COLLABORATION and self.source > self.target:
            low, high = self.target, self.source
            object.__setattr__(self, "source", low)
            object.__setattr__(self, "target", high)

    @property
    def edge(self) -> tuple[str, str]:
        return (self.source, self.target)

    @property
    def sort_key(self) -> tuple[int, str, str]:
        """Total order: time, then source, then target (ties broken stably)."""
        return (self.t, self.source, self.target)


def _normalize_collab(a: str, b: str, t: int) -> Event:
    if a > b:
        a, b = b, a
    return Event(a, b, t, COLLABORATION)


@dataclass(frozen=True)
class TemporalLayer:
    """A time-sorted event sequence plus its static-edge timeline index.

    ``nodes`` is the node universe: every event endpoint plus any extra
    nodes supplied at construction (kept so shuffles that isolate a node
    still conserve the node count). ``edge_index`` maps each distinct
    static edge to its ascending timestamp tuple.
    """

    directed: bool
    events: tuple[Event, ...]
    edge_index: Mapping[tuple[str, str], tuple[int, ...]]
    nodes: frozenset[str]

    @property
    def edge_count(self) -> int:
        return len(self.edge_index)

    @property
    def event_count(self) -> int:
        return len(self.events)

    def span(self) -> tuple[int, int] | None:
        """(first, last) timestamp over all events, or None when empty."""
        if not self.events:
            return None
        return (self.events[0].t, self.events[-1].t)

    def endpoints(self) -> frozenset[str]:
        """Nodes that actually appear in at least one event."""
        return frozenset(n for e in self.events for n in e.edge)


def make_layer(
    events: Iterable[Event],
    directed: bool,
    extra_nodes: Iterable[str] = (),
) -> TemporalLayer:
    """Build a layer: sort events, index per-edge timelines, fix the universe."""
    expected = OPPOSITION if directed else COLLABORATION
    ordered = sorted(events, key=lambda e: e.sort_key)
    index: dict[tuple[str, str], list[int]] = {}
    nodes = set(extra_nodes)
    for e in ordered:
        if e.layer != expected:
            raise ValidationError(f"{e.layer} event in a {expected} layer")
        index.setdefault(e.edge, []).append(e.t)
        nodes.add(e.source)
        nodes.add(e.target)
    frozen = {edge: tuple(ts) for edge, ts in index.items()}
    return TemporalLayer(directed, tuple(ordered), frozen, frozenset(nodes))


_DIRECTED_COLUMNS = ("source", "target", "date")
_UNDIRECTED_COLUMNS = ("node_a", "node_b", "date")


def parse_event_file(stream: TextIO, directed: bool) -> TemporalLayer:
    """Parse a CSV event file into a layer.

    Directed files need columns source,target,date; undirected files need
    node_a,node_b,date. Extra columns are ignored; column order is free.
    Dates are ISO YYYY-MM-DD. Malformed rows raise ParseError with the
    line number.
    """
    reader = csv.reader(stream)
    header = next(reader, None)
    if header is None:
        raise ParseError("empty input: missing header row")
    names = [h.strip() for h in header]
    wanted = _DIRECTED_COLUMNS if directed else _UNDIRECTED_COLUMNS
    try:
        cols = tuple(names.index(c) for c in wanted)
    except ValueError:
        missing = ", ".join(c for c in wanted if c not in names)
        raise ParseError(f"missing column(s): {missing}") from None
    events: list[Event] = []
    for lineno, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) <= max(cols):
            raise ParseError(f"line {lineno}: expected {len(names)} fields, got {len(row)}")
        a, b, text = (row[c].strip() for c in cols)
        if not a or not b:
            raise ParseError(f"line {lineno}: empty node id")
        if a == b:
            raise ParseError(f"line {lineno}: self-relation on node {a!r}")
        try:
            t = day_from_iso(text)
        except ValueError:
            raise ParseError(f"line {lineno}: malformed date {text!r}") from None
        events.append(Event(a, b, t) if directed else _normalize_collab(a, b, t))
    return make_layer(events, directed)


def write_event_file(layer: TemporalLayer, stream: TextIO) -> None:
    """Write a layer back out in the format parse_event_file reads."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(_DIRECTED_COLUMNS if layer.directed else _UNDIRECTED_COLUMNS)
    for e in layer.events:
        writer.writerow((e.source, e.target, iso_from_day(e.t)))


def parse_attribute_file(stream: TextIO) -> dict[str, int]:
    """Parse a node,patent_count CSV into a dict; counts are ints >= 0."""
    reader = csv.reader(stream)
    header = next(reader, None)
    if header is None:
        raise ParseError("empty input: missing header row")
    names = [h.strip() for h in header]
    try:
        node_col = names.index("node")
        count_col = names.index("patent_count")
    except ValueError:
        raise ParseError("missing column(s): node, patent_count") from None
    attrs: dict[str, int] = {}
    for lineno, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) <= max(node_col, count_col):
            raise ParseError(f"line {lineno}: expected {len(names)} fields, got {len(row)}")
        node = row[node_col].strip()
        if not node:
            raise ParseError(f"line {lineno}: empty node id")
        if node in attrs:
            raise ParseError(f"line {lineno}: duplicate node {node!r}")
        text = row[count_col].strip()
        try:
            count = int(text)
        except ValueError:
            raise ParseError(f"line {lineno}: malformed count {text!r}") from None
        if count < 0:
            raise ParseError(f"line {lineno}: negative count {count}")
        attrs[node] = count
    return attrs


def write_attribute_file(attrs: Mapping[str, int], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(("node", "patent_count"))
    for node in sorted(attrs):
        writer.writerow((node, attrs[node]))


@dataclass(frozen=True)
class TwoLayerNetwork:
    """Opposition layer, collaboration layer, optional node attributes.

    The node universe is the union over both layers and the attribute
    table. ``attribute`` returns None for nodes absent from the table
    (callers treat that as unknown and exclude the node from statistics).
    """

    opposition: TemporalLayer
    collaboration: TemporalLayer
    attributes: Mapping[str, int] | None = None
    nodes: frozenset[str] = field(init=False)

    def __post_init__(self) -> None:
        if not self.opposition.directed:
            raise ValidationError("opposition layer must be directed")
        if self.collaboration.directed:
            raise ValidationError("collaboration layer must be undirected")
        if self.attributes is not None:
            for node, count in self.attributes.items():
                if not isinstance(count, int) or count < 0:
                    raise ValidationError(f"bad attribute for {node!r}: {count!r}")
        universe = self.opposition.nodes | self.collaboration.nodes
        if self.attributes:
            universe |= frozenset(self.attributes)
        object.__setattr__(self, "nodes", frozenset(universe))

    @property
    def has_attributes(self) -> bool:
        return self.attributes is not None

    def attribute(self, node: str) -> int | None:
        if self.attributes is None:
            return None
        return self.attributes.get(node)


def build_network(
    opposition: TemporalLayer,
    collaboration: TemporalLayer | None = None,
    attributes: Mapping[str, int] | None = None,
) -> TwoLayerNetwork:
    """Assemble a network; a missing collaboration layer becomes an empty one."""
    if collaboration is None:
        collaboration = make_layer((), directed=False)
    return TwoLayerNetwork(opposition, collaboration, attributes)


@dataclass(frozen=True)
class LayerStats:
    nodes: int
    edges: int
    events: int
    start: int | None
    end: int | None


@dataclass(frozen=True)
class NetworkSummary:
    opposition: LayerStats
    collaboration: LayerStats
    total_nodes: int


def _layer_stats(layer: TemporalLayer) -> LayerStats:
    span = layer.span()
    return LayerStats(
        nodes=len(layer.endpoints()),
        edges=layer.edge_count,
        events=layer.event_count,
        start=None if span is None else span[0],
        end=None if span is None else span[1],
    )


def layer_summary(network: TwoLayerNetwork) -> NetworkSummary:
    """Per-layer node/edge/event counts and time spans, plus the union node count."""
    return NetworkSummary(
        opposition=_layer_stats(network.opposition),
        collaboration=_layer_stats(network.collaboration),
        total_nodes=len(network.nodes),
    )
