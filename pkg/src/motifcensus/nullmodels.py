"""Randomized reference layers and their conservation checks.

Five shuffles, each destroying one kind of structure while conserving
the rest. All operate on a directed layer and return a new layer over
the same node universe; the input is never mutated. Every model is
driven by a single integer seed, and sample streams derive per-sample
seeds with a splitmix64 mix so sample i is reproducible no matter how
many samples are drawn.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Mapping

import numpy as np

from .errors import ValidationError
from .events import Event, TemporalLayer, make_layer


class NullModel(Enum):
    """Which structure gets randomized.

    LS resamples the static digraph uniformly and reassigns the observed
    timelines to the new edges by a random bijection. DCLS rewires by
    double-edge swaps, preserving in/out degrees; each timeline travels
    with its source endpoint through the swaps. WTS redraws each edge's
    timestamps uniformly inside the layer's observed window, keeping the
    per-edge event count. IS permutes each edge's inter-event gaps,
    keeping its first timestamp and gap multiset. TS permutes the global
    timestamp multiset across all events, keeping per-edge counts.
    """

    LS = "ls"
    DCLS = "dcls"
    WTS = "wts"
    IS = "is"
    TS = "ts"


_MIX_CONST = 0x9E3779B97F4A7C15
_MASK64 = (1 << 64) - 1


def derive_seed(seed: int, index: int) -> int:
    """splitmix64 of seed xor a distinct odd offset per sample index."""
    z = (seed ^ (_MIX_CONST * (index + 1))) & _MASK64
    z = (z + _MIX_CONST) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (z ^ (z >> 31)) & _MASK64


def _require_directed(layer: TemporalLayer) -> None:
    if not layer.directed:
        raise ValidationError("null models operate on the directed layer")


def _sorted_edges(layer: TemporalLayer) -> list[tuple[str, str]]:
    return sorted(layer.edge_index)


def _rebuild(
    layer: TemporalLayer,
    edges: list[tuple[str, str]],
    timelines: list[tuple[int, ...]],
) -> TemporalLayer:
    events = [
        Event(u, v, int(t))
        for (u, v), timeline in zip(edges, timelines)
        for t in timeline
    ]
    return make_layer(events, directed=True, extra_nodes=layer.nodes)


def _sample_simple_digraph(
    n: int, m: int, rng: np.random.Generator
) -> list[tuple[int, int]]:
    """m distinct ordered pairs (i, j), i != j, uniform over all such sets."""
    capacity = n * (n - 1)
    if m > capacity:
        raise ValidationError(f"{m} edges cannot fit in a simple digraph on {n} nodes")
    if capacity <= 4_000_000:
        flat = rng.choice(capacity, size=m, replace=False)
        pairs = []
        for q in flat:
            i, r = divmod(int(q), n - 1)
            pairs.append((i, r + (1 if r >= i else 0)))
        return pairs
    seen: set[tuple[int, int]] = set()
    while len(seen) < m:
        i = int(rng.integers(n))
        j = int(rng.integers(n))
        if i != j:
            seen.add((i, j))
    return sorted(seen)


def _shuffle_ls(layer: TemporalLayer, rng: np.random.Generator) -> TemporalLayer:
    nodes = sorted(layer.nodes)
    edges = _sorted_edges(layer)
    pairs = sorted(_sample_simple_digraph(len(nodes), len(edges), rng))
    new_edges = [(nodes[i], nodes[j]) for i, j in pairs]
    perm = rng.permutation(len(edges))
    timelines = [layer.edge_index[edges[int(p)]] for p in perm]
    return _rebuild(layer, new_edges, timelines)


def _shuffle_dcls(
    layer: TemporalLayer, rng: np.random.Generator, swap_factor: int
) -> TemporalLayer:
    edges = _sorted_edges(layer)
    timelines = [layer.edge_index[e] for e in edges]
    m = len(edges)
    if m >= 2:
        edge_set = set(edges)
        target = swap_factor * m
        # cap attempts so graphs with no valid swap still terminate
        cap = max(1000, 200 * target)
        accepted = 0
        attempts = 0
        while accepted < target and attempts < cap:
            attempts += 1
            i1 = int(rng.integers(m))
            i2 = int(rng.integers(m))
            if i1 == i2:
                continue
            a, b = edges[i1]
            c, d = edges[i2]
            # shared endpoints mean a no-op or a self-loop; skip
            if a == c or b == d or a == d or b == c:
                continue
            new1 = (a, d)
            new2 = (c, b)
            if new1 in edge_set or new2 in edge_set:
                continue
            edge_set.remove((a, b))
            edge_set.remove((c, d))
            edge_set.add(new1)
            edge_set.add(new2)
            edges[i1] = new1
            edges[i2] = new2
            accepted += 1
    return _rebuild(layer, edges, timelines)


def _shuffle_wts(layer: TemporalLayer, rng: np.random.Generator) -> TemporalLayer:
    span = layer.span()
    assert span is not None
    lo, hi = span
    edges = _sorted_edges(layer)
    timelines = []
    for e in edges:
        k = len(layer.edge_index[e])
        draws = rng.integers(lo, hi + 1, size=k)
        timelines.append(tuple(int(t) for t in np.sort(draws)))
    return _rebuild(layer, edges, timelines)


def _shuffle_is(layer: TemporalLayer, rng: np.random.Generator) -> TemporalLayer:
    edges = _sorted_edges(layer)
    timelines: list[tuple[int, ...]] = []
    for e in edges:
        timeline = layer.edge_index[e]
        if len(timeline) < 3:
            timelines.append(timeline)
            continue
        gaps = np.diff(np.asarray(timeline, np.int64))
        gaps = rng.permutation(gaps)
        rebuilt = timeline[0] + np.concatenate(([0], np.cumsum(gaps)))
        timelines.append(tuple(int(t) for t in rebuilt))
    return _rebuild(layer, edges, timelines)


def _shuffle_ts(layer: TemporalLayer, rng: np.random.Generator) -> TemporalLayer:
    edges = _sorted_edges(layer)
    stamps = np.asarray([t for e in edges for t in layer.edge_index[e]], np.int64)
    stamps = rng.permutation(stamps)
    timelines = []
    cursor = 0
    for e in edges:
        k = len(layer.edge_index[e])
        chunk = np.sort(stamps[cursor : cursor + k])
        cursor += k
        timelines.append(tuple(int(t) for t in chunk))
    return _rebuild(layer, edges, timelines)


def shuffle(
    layer: TemporalLayer,
    model: NullModel,
    seed: int,
    swap_factor: int = 10,
) -> TemporalLayer:
    """One randomized layer under the given null model and seed."""
    _require_directed(layer)
    if swap_factor < 1:
        raise ValidationError("swap_factor must be >= 1")
    if not layer.events:
        return layer
    rng = np.random.default_rng(seed)
    if model is NullModel.LS:
        return _shuffle_ls(layer, rng)
    if model is NullModel.DCLS:
        return _shuffle_dcls(layer, rng, swap_factor)
    if model is NullModel.WTS:
        return _shuffle_wts(layer, rng)
    if model is NullModel.IS:
        return _shuffle_is(layer, rng)
    return _shuffle_ts(layer, rng)


def sample_layers(
    layer: TemporalLayer,
    model: NullModel,
    samples: int,
    seed: int,
    swap_factor: int = 10,
):
    """Yield `samples` independent shuffles with per-index derived seeds."""
    if samples < 1:
        raise ValidationError("samples must be >= 1")
    for i in range(samples):
        yield shuffle(layer, model, derive_seed(seed, i), swap_factor)


@dataclass(frozen=True)
class ConservationReport:
    """Pass/fail per conservation law for one (original, shuffled) pair."""

    model: NullModel
    laws: Mapping[str, bool]

    @property
    def passed(self) -> bool:
        return all(self.laws.values())


def _degree_counter(edges, index: int) -> Counter:
    return Counter(e[index] for e in edges)


def _timeline_multiset(layer: TemporalLayer) -> Counter:
    return Counter(layer.edge_index.values())


def _is_simple(layer: TemporalLayer) -> bool:
    return all(u != v for u, v in layer.edge_index)


def verify_conservation(
    original: TemporalLayer, shuffled: TemporalLayer, model: NullModel
) -> ConservationReport:
    """Check every conservation law the model promises."""
    _require_directed(original)
    _require_directed(shuffled)
    laws: dict[str, bool] = {}
    orig_edges = original.edge_index
    new_edges = shuffled.edge_index
    if model is NullModel.LS:
        laws["node-count"] = len(original.nodes) == len(shuffled.nodes)
        laws["edge-count"] = len(orig_edges) == len(new_edges)
        laws["timeline-multiset"] = _timeline_multiset(original) == _timeline_multiset(shuffled)
        laws["simple-graph"] = _is_simple(shuffled)
    elif model is NullModel.DCLS:
        laws["out-degrees"] = _degree_counter(orig_edges, 0) == _degree_counter(new_edges, 0)
        laws["in-degrees"] = _degree_counter(orig_edges, 1) == _degree_counter(new_edges, 1)
        laws["timeline-multiset"] = _timeline_multiset(original) == _timeline_multiset(shuffled)
        laws["simple-graph"] = _is_simple(shuffled)
    elif model is NullModel.WTS:
        laws["edge-set"] = set(orig_edges) == set(new_edges)
        laws["per-edge-event-counts"] = {e: len(ts) for e, ts in orig_edges.items()} == {
            e: len(ts) for e, ts in new_edges.items()
        }
        span = original.span()
        if span is None:
            laws["window-containment"] = not shuffled.events
        else:
            laws["window-containment"] = all(
                span[0] <= e.t <= span[1] for e in shuffled.events
            )
    elif model is NullModel.IS:
        laws["edge-set"] = set(orig_edges) == set(new_edges)
        laws["per-edge-first-last"] = all(
            ts[0] == new_edges[e][0] and ts[-1] == new_edges[e][-1]
            for e, ts in orig_edges.items()
        ) if set(orig_edges) == set(new_edges) else False
        laws["per-edge-gap-multiset"] = all(
            Counter(np.diff(ts).tolist()) == Counter(np.diff(new_edges[e]).tolist())
            for e, ts in orig_edges.items()
        ) if set(orig_edges) == set(new_edges) else False
    else:
        laws["edge-set"] = set(orig_edges) == set(new_edges)
        laws["per-edge-event-counts"] = {e: len(ts) for e, ts in orig_edges.items()} == {
            e: len(ts) for e, ts in new_edges.items()
        }
        laws["timestamp-multiset"] = Counter(e.t for e in original.events) == Counter(
            e.t for e in shuffled.events
        )
    return ConservationReport(model, laws)
