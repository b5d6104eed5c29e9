"""Collaboration overlay on opposition motifs.

For each opposition motif instance, collect the collaboration events
whose endpoints both lie in the motif's node set and whose time falls in
[t_first - pad, t_last + pad]. Aggregations over the overlay reproduce
the how-many / which-pair / when / per-year views.
"""

from __future__ import annotations

import itertools
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .durations import DAYS_PER_YEAR
from .errors import ValidationError
from .events import COLLABORATION, Event, TwoLayerNetwork
from .motifs import (
    MotifInstance,
    PairClass,
    Thresholds,
    class_labels,
    enumerate_motifs,
)

DEFAULT_PAD_DAYS = 3650


@dataclass(frozen=True, slots=True)
class PadWindow:
    """Symmetric slack, in days, around a motif's [t_first, t_last] span."""

    days: int = DEFAULT_PAD_DAYS

    def __post_init__(self) -> None:
        if not isinstance(self.days, int) or self.days < 0:
            raise ValidationError("pad must be a non-negative int of days")


FIRST_OPPOSITION = "first-opposition"
SECOND_OPPOSITION = "second-opposition"
NO_OPPOSITION = "no-opposition"
SAME_OPPOSITION = "opposition"
PAIR_KINDS: tuple[str, ...] = (FIRST_OPPOSITION, SECOND_OPPOSITION, NO_OPPOSITION)

BEFORE = "before"
BETWEEN = "between"
AFTER = "after"
TIMINGS: tuple[str, ...] = (BEFORE, BETWEEN, AFTER)

COUNT_BUCKETS: tuple[str, ...] = ("0", "1", "2", "3+")

# two-event classes on three nodes, where pair identity is informative
THREE_NODE_PAIR_LABELS: tuple[str, ...] = tuple(
    str(c) for c in PairClass if c not in (PairClass.REPETITION, PairClass.PING_PONG)
)


@dataclass(frozen=True)
class OverlayRecord:
    """One collaboration event attached to one motif instance."""

    collab: Event
    pair_kind: str
    pair_roles: tuple[str, ...]
    timing: str | None


def _pair_kind(instance: MotifInstance, pair: frozenset[str]) -> str:
    """Which opposition relation, if any, the collaborating pair matches.

    Two-event motifs distinguish first vs second opposition; when both
    events use the same node pair the kind collapses to plain opposition.
    Three-event motifs only distinguish opposition vs no-opposition.
    """
    matches = [frozenset(e.edge) == pair for e in instance.events]
    if len(instance.events) == 2:
        if matches[0] and matches[1]:
            return SAME_OPPOSITION
        if matches[0]:
            return FIRST_OPPOSITION
        if matches[1]:
            return SECOND_OPPOSITION
        return NO_OPPOSITION
    return SAME_OPPOSITION if any(matches) else NO_OPPOSITION


def _timing(instance: MotifInstance, t: int) -> str | None:
    """before / between / after for two-event motifs; None otherwise.

    The between interval is closed on both ends.
    """
    if len(instance.events) != 2:
        return None
    t1, t2 = instance.events[0].t, instance.events[1].t
    if t < t1:
        return BEFORE
    if t > t2:
        return AFTER
    return BETWEEN


def attach_collaborations(
    network: TwoLayerNetwork,
    m: int,
    thresholds: Thresholds,
    pad: PadWindow = PadWindow(),
) -> Iterator[tuple[MotifInstance, tuple[OverlayRecord, ...]]]:
    """Yield each opposition motif instance with its overlay records.

    Records are ordered by collaborating pair, then time. Instances with
    no overlapping collaborations yield an empty record tuple, so the
    stream still drives the zero bucket of the count distribution.
    """
    index = network.collaboration.edge_index
    for instance in enumerate_motifs(network.opposition, m, thresholds):
        lo = instance.t_first - pad.days
        hi = instance.t_last + pad.days
        records = []
        for a, b in itertools.combinations(sorted(instance.node_set), 2):
            timeline = index.get((a, b))
            if not timeline:
                continue
            pair = frozenset((a, b))
            start = bisect_left(timeline, lo)
            stop = bisect_right(timeline, hi)
            for t in timeline[start:stop]:
                records.append(
                    OverlayRecord(
                        collab=Event(a, b, t, COLLABORATION),
                        pair_kind=_pair_kind(instance, pair),
                        pair_roles=_role_pair(instance, a, b),
                        timing=_timing(instance, t),
                    )
                )
        yield instance, tuple(records)


def _role_pair(instance: MotifInstance, a: str, b: str) -> tuple[str, str]:
    by_node = {node: role for role, node in instance.roles.items()}
    return tuple(sorted((by_node[a], by_node[b])))  # type: ignore[return-value]


Overlay = tuple[MotifInstance, tuple[OverlayRecord, ...]]


@dataclass(frozen=True)
class CountDistribution:
    """Per class: instance count and fraction with 0 / 1 / 2 / 3+ collaborations."""

    motif_class: str
    instances: int
    fractions: Mapping[str, float] | None


def collab_count_distribution(
    overlays: Iterable[Overlay], m: int
) -> list[CountDistribution]:
    """How many collaborations accompany each motif, per class.

    Classes with no instances get fractions None (an empty row when
    serialized).
    """
    labels = class_labels(m)
    buckets: dict[str, dict[str, int]] = {lab: dict.fromkeys(COUNT_BUCKETS, 0) for lab in labels}
    totals: dict[str, int] = dict.fromkeys(labels, 0)
    for instance, records in overlays:
        n = len(records)
        key = str(n) if n < 3 else "3+"
        buckets[instance.label][key] += 1
        totals[instance.label] += 1
    out = []
    for lab in labels:
        total = totals[lab]
        fractions = (
            None
            if total == 0
            else {key: buckets[lab][key] / total for key in COUNT_BUCKETS}
        )
        out.append(CountDistribution(lab, total, fractions))
    return out


def collab_pair_fractions(
    overlays: Iterable[Overlay],
) -> dict[str, Mapping[str, float] | None]:
    """Which node pair collaborates, per three-node two-event class.

    Fractions are over collaboration records of that class; a class with
    no records maps to None.
    """
    counts: dict[str, dict[str, int]] = {
        lab: dict.fromkeys(PAIR_KINDS, 0) for lab in THREE_NODE_PAIR_LABELS
    }
    for instance, records in overlays:
        lab = instance.label
        if lab not in counts:
            continue
        for record in records:
            counts[lab][record.pair_kind] += 1
    out: dict[str, Mapping[str, float] | None] = {}
    for lab in THREE_NODE_PAIR_LABELS:
        total = sum(counts[lab].values())
        out[lab] = (
            None if total == 0 else {k: counts[lab][k] / total for k in PAIR_KINDS}
        )
    return out


def collab_timing_fractions(
    overlays: Iterable[Overlay],
) -> dict[tuple[str, str], Mapping[str, float] | None]:
    """When each pair kind collaborates, per three-node two-event class.

    Keyed by (class label, pair kind); fractions over before/between/
    after within that cell, None when the cell has no records.
    """
    counts: dict[tuple[str, str], dict[str, int]] = {
        (lab, kind): dict.fromkeys(TIMINGS, 0)
        for lab in THREE_NODE_PAIR_LABELS
        for kind in PAIR_KINDS
    }
    for instance, records in overlays:
        lab = instance.label
        if lab not in THREE_NODE_PAIR_LABELS:
            continue
        for record in records:
            if record.timing is not None:
                counts[(lab, record.pair_kind)][record.timing] += 1
    out: dict[tuple[str, str], Mapping[str, float] | None] = {}
    for key, cell in counts.items():
        total = sum(cell.values())
        out[key] = None if total == 0 else {t: cell[t] / total for t in TIMINGS}
    return out


def _interval_lengths(
    instance: MotifInstance,
    pad: PadWindow,
    collab_span: tuple[int, int] | None,
) -> dict[str, float]:
    """Days available to each timing interval for one two-event instance.

    With a collaboration span given, before/after are clipped to what the
    collaboration layer can actually cover (never negative); without it
    the raw pad is used on both sides.
    """
    t1, t2 = instance.events[0].t, instance.events[1].t
    before: float = pad.days
    after: float = pad.days
    if collab_span is not None:
        lo, hi = collab_span
        before = min(pad.days, max(0, t1 - lo))
        after = min(pad.days, max(0, hi - t2))
    return {BEFORE: before, BETWEEN: float(t2 - t1), AFTER: after}


def collab_timing_per_year(
    overlays: Iterable[Overlay],
    pad: PadWindow = PadWindow(),
    collab_span: tuple[int, int] | None = None,
) -> dict[tuple[str, str], Mapping[str, float | None] | None]:
    """Timing fractions divided by mean interval length in years.

    Interval lengths are averaged over all instances of the class (not
    just those with collaborations). A zero mean length leaves that cell
    None; a class/kind cell with no records is None entirely.
    """
    counts: dict[tuple[str, str], dict[str, int]] = {
        (lab, kind): dict.fromkeys(TIMINGS, 0)
        for lab in THREE_NODE_PAIR_LABELS
        for kind in PAIR_KINDS
    }
    length_sums: dict[str, dict[str, float]] = {
        lab: dict.fromkeys(TIMINGS, 0.0) for lab in THREE_NODE_PAIR_LABELS
    }
    instance_totals: dict[str, int] = dict.fromkeys(THREE_NODE_PAIR_LABELS, 0)
    for instance, records in overlays:
        lab = instance.label
        if lab not in THREE_NODE_PAIR_LABELS:
            continue
        instance_totals[lab] += 1
        lengths = _interval_lengths(instance, pad, collab_span)
        for timing in TIMINGS:
            length_sums[lab][timing] += lengths[timing]
        for record in records:
            if record.timing is not None:
                counts[(lab, record.pair_kind)][record.timing] += 1
    out: dict[tuple[str, str], Mapping[str, float | None] | None] = {}
    for lab in THREE_NODE_PAIR_LABELS:
        n_instances = instance_totals[lab]
        for kind in PAIR_KINDS:
            cell = counts[(lab, kind)]
            total = sum(cell.values())
            if total == 0 or n_instances == 0:
                out[(lab, kind)] = None
                continue
            rates: dict[str, float | None] = {}
            for timing in TIMINGS:
                mean_days = length_sums[lab][timing] / n_instances
                years = mean_days / DAYS_PER_YEAR
                rates[timing] = None if years == 0.0 else (cell[timing] / total) / years
            out[(lab, kind)] = rates
    return out
