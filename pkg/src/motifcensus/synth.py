"""Synthetic two-layer networks with heavy-tailed activity and bursts.

The generator targets the qualitative texture of the reference data:
a few highly active companies, many quiet ones; opposition timestamps
that cluster because disputes trigger follow-ups; attribute counts whose
mean sits far above their median. Fully deterministic per seed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .events import (
    COLLABORATION,
    Event,
    TwoLayerNetwork,
    build_network,
    make_layer,
)

_BURST_LOOKBACK = 100
_BURST_MAX_GAP_DAYS = 90


@dataclass(frozen=True)
class SynthConfig:
    """Knobs for the generator; defaults give a usable demo network."""

    node_count: int = 100
    opposition_events: int = 500
    collaboration_events: int = 30
    span_days: int = 7300
    activity_exponent: float = 2.0
    burst_prob: float = 0.3
    attr_exponent: float = 1.8
    seed: int = 0

    def __post_init__(self) -> None:
        if self.node_count < 2:
            raise ValidationError("need at least two nodes")
        if self.opposition_events < 0 or self.collaboration_events < 0:
            raise ValidationError("event counts must be non-negative")
        if self.span_days < 1:
            raise ValidationError("span must be at least one day")
        if not 0.0 <= self.burst_prob <= 1.0:
            raise ValidationError("burst probability must be in [0, 1]")
        if self.activity_exponent <= 1.0 or self.attr_exponent <= 1.0:
            raise ValidationError("zipf exponents must exceed 1")


def _node_names(n: int) -> list[str]:
    width = max(4, len(str(n - 1)))
    return [f"C{i:0{width}d}" for i in range(n)]


def _weight_cdf(weights: np.ndarray) -> np.ndarray:
    total = float(weights.sum())
    return np.cumsum(weights / total)


def _draw(cdf: np.ndarray, rng: np.random.Generator) -> int:
    idx = int(np.searchsorted(cdf, rng.random(), side="right"))
    return min(idx, len(cdf) - 1)


def generate_network(config: SynthConfig) -> TwoLayerNetwork:
    """Build a synthetic network from the config, deterministically.

    Opposition sources and targets are drawn from independent zipf
    activity weights. With burst probability, a new event copies the
    edge of a recent event at a short gap, creating repeat/burst motifs;
    otherwise endpoints are fresh draws at a uniform time.
    """
    rng = np.random.default_rng(config.seed)
    names = _node_names(config.node_count)
    out_cdf = _weight_cdf(rng.zipf(config.activity_exponent, config.node_count).astype(np.float64))
    in_cdf = _weight_cdf(rng.zipf(config.activity_exponent, config.node_count).astype(np.float64))

    opposition: list[Event] = []
    recent: list[tuple[int, int, int]] = []  # (src, dst, t) in draw order

    def fresh() -> tuple[int, int, int]:
        while True:
            s = _draw(out_cdf, rng)
            d = _draw(in_cdf, rng)
            if s != d:
                break
        return s, d, int(rng.integers(config.span_days + 1))

    for _ in range(config.opposition_events):
        s = d = t = -1
        if recent and rng.random() < config.burst_prob:
            pool = recent[-_BURST_LOOKBACK:]
            ps, pd, pt = pool[int(rng.integers(len(pool)))]
            gap = int(rng.integers(1, _BURST_MAX_GAP_DAYS + 1))
            if pt + gap <= config.span_days:
                s, d, t = ps, pd, pt + gap
        if t < 0:
            s, d, t = fresh()
        recent.append((s, d, t))
        opposition.append(Event(names[s], names[d], t))

    collaboration: list[Event] = []
    for _ in range(config.collaboration_events):
        while True:
            a = _draw(out_cdf, rng)
            b = _draw(in_cdf, rng)
            if a != b:
                break
        t = int(rng.integers(config.span_days + 1))
        lo, hi = sorted((names[a], names[b]))
        collaboration.append(Event(lo, hi, t, layer=COLLABORATION))

    attrs = {
        name: int(v) - 1
        for name, v in zip(names, rng.zipf(config.attr_exponent, config.node_count))
    }
    all_names = frozenset(names)
    return build_network(
        make_layer(opposition, directed=True, extra_nodes=all_names),
        make_layer(collaboration, directed=False, extra_nodes=all_names),
        attrs,
    )
