"""Node-attribute statistics over motif positions.

Who fills each position of a motif, measured by the node attribute
(patent count in the reference data). Samples accumulate one value per
(instance, position filler); nodes missing from the attribute table are
excluded. Median is the lower-middle element; std is the population
form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import ValidationError
from .events import TwoLayerNetwork
from .motifs import (
    MUTUAL,
    PATH,
    STATIC_IN_BURST,
    STATIC_OUT_BURST,
    PairClass,
    Thresholds,
    enumerate_motifs,
    enumerate_static_instances,
    static_projection,
)

# canonical position order per two-event class label
TEMPORAL_POSITIONS: Mapping[str, tuple[str, ...]] = {
    "R": ("first-source", "first-target"),
    "P": ("first-source", "first-target"),
    "I": ("first-opposer", "second-opposer", "opposed"),
    "O": ("opposer", "first-opposed", "second-opposed"),
    "C": ("first-source", "center", "second-target"),
    "W": ("center", "first-target", "second-source"),
}

STATIC_POSITIONS: Mapping[str, tuple[str, ...]] = {
    MUTUAL: ("node",),
    STATIC_IN_BURST: ("center", "leaf"),
    STATIC_OUT_BURST: ("center", "leaf"),
    PATH: ("source", "center", "sink"),
}

BASELINE_CLASS = "all-events"
BASELINE_POSITIONS: tuple[str, ...] = ("opposer", "opposed")


@dataclass(frozen=True)
class PositionStats:
    motif_class: str
    position: str
    count: int
    mean: float | None
    median: float | None
    std: float | None


def summarize(values: Sequence[float]) -> tuple[int, float | None, float | None, float | None]:
    """(count, mean, lower-middle median, population std); Nones when empty."""
    n = len(values)
    if n == 0:
        return 0, None, None, None
    mean = sum(values) / n
    median = sorted(values)[(n - 1) // 2]
    std = math.sqrt(sum((v - mean) ** 2 for v in values) / n)
    return n, mean, float(median), std


def _require_attributes(network: TwoLayerNetwork) -> Mapping[str, int]:
    if network.attributes is None:
        raise ValidationError("attribute statistics need an attribute table")
    return network.attributes


def _rows(
    samples: Mapping[tuple[str, str], list[int]],
    observed: Mapping[str, int],
    order: Iterable[tuple[str, str]],
) -> list[PositionStats]:
    # classes with no instances at all produce no rows; a position can
    # still show count 0 when every occupant lacked an attribute
    rows = []
    for cls, position in order:
        if observed.get(cls, 0) == 0:
            continue
        count, mean, median, std = summarize(samples.get((cls, position), []))
        rows.append(PositionStats(cls, position, count, mean, median, std))
    return rows


def position_stats_temporal(
    network: TwoLayerNetwork,
    thresholds: Thresholds,
    include_baseline: bool = True,
) -> list[PositionStats]:
    """Attribute stats per (two-event class, position).

    The baseline rows pool every opposition event: its source is an
    opposer sample, its target an opposed sample.
    """
    attrs = _require_attributes(network)
    samples: dict[tuple[str, str], list[int]] = {}
    observed: dict[str, int] = {}

    def push(cls: str, position: str, node: str) -> None:
        value = attrs.get(node)
        if value is not None:
            samples.setdefault((cls, position), []).append(value)

    for instance in enumerate_motifs(network.opposition, 2, thresholds):
        observed[instance.label] = observed.get(instance.label, 0) + 1
        for position, node in instance.roles.items():
            push(instance.label, position, node)
    order: list[tuple[str, str]] = [
        (str(cls), position)
        for cls in PairClass
        for position in TEMPORAL_POSITIONS[str(cls)]
    ]
    if include_baseline:
        for event in network.opposition.events:
            observed[BASELINE_CLASS] = observed.get(BASELINE_CLASS, 0) + 1
            push(BASELINE_CLASS, "opposer", event.source)
            push(BASELINE_CLASS, "opposed", event.target)
        order.extend((BASELINE_CLASS, position) for position in BASELINE_POSITIONS)
    return _rows(samples, observed, order)


def position_stats_static(network: TwoLayerNetwork) -> list[PositionStats]:
    """Attribute stats per (static pattern, position).

    Mutual pools both nodes into one position; burst leaves pool into
    one position since no order distinguishes them.
    """
    attrs = _require_attributes(network)
    graph = static_projection(network.opposition)
    samples: dict[tuple[str, str], list[int]] = {}
    observed: dict[str, int] = {}
    for pattern, positions in enumerate_static_instances(graph):
        observed[pattern] = observed.get(pattern, 0) + 1
        for position, nodes in positions.items():
            for node in nodes:
                value = attrs.get(node)
                if value is not None:
                    samples.setdefault((pattern, position), []).append(value)
    order = [
        (pattern, position)
        for pattern, position_list in STATIC_POSITIONS.items()
        for position in position_list
    ]
    return _rows(samples, observed, order)


@dataclass(frozen=True)
class AttributeDistribution:
    """Shape summary of the attribute table: histogram plus scalar stats."""

    count: int
    mean: float
    median: float
    minimum: int
    maximum: int
    histogram: tuple[tuple[int, int, int], ...]  # (lo, hi exclusive, count)


def attribute_distribution(network: TwoLayerNetwork) -> AttributeDistribution:
    """Log-binned histogram (zero bin, then powers of two) and summary stats."""
    attrs = _require_attributes(network)
    if not attrs:
        raise ValidationError("attribute table is empty")
    values = sorted(attrs.values())
    count, mean, median, _ = summarize(values)
    assert mean is not None and median is not None
    maximum = values[-1]
    bins: list[tuple[int, int, int]] = []
    edges: list[tuple[int, int]] = [(0, 1)]
    width_lo = 1
    while width_lo <= maximum:
        edges.append((width_lo, width_lo * 2))
        width_lo *= 2
    for lo, hi in edges:
        in_bin = sum(1 for v in values if lo <= v < hi)
        bins.append((lo, hi, in_bin))
    return AttributeDistribution(
        count=count,
        mean=mean,
        median=median,
        minimum=values[0],
        maximum=maximum,
        histogram=tuple(bins),
    )
