"""Synthetic generator: determinism, sizes, texture, and round-trips."""

import io
import statistics

import pytest

from motifcensus import (
    SynthConfig,
    Thresholds,
    ValidationError,
    census,
    generate_network,
    layer_summary,
    parse_attribute_file,
    parse_event_file,
    write_attribute_file,
    write_event_file,
)


def test_same_seed_reproduces_network_exactly():
    a = generate_network(SynthConfig(seed=42))
    b = generate_network(SynthConfig(seed=42))
    assert a.opposition.events == b.opposition.events
    assert a.collaboration.events == b.collaboration.events
    assert a.attributes == b.attributes


def test_different_seeds_differ():
    a = generate_network(SynthConfig(seed=1))
    b = generate_network(SynthConfig(seed=2))
    assert a.opposition.events != b.opposition.events


def test_summary_matches_config_counts():
    config = SynthConfig(
        node_count=37, opposition_events=111, collaboration_events=13, seed=9
    )
    net = generate_network(config)
    summary = layer_summary(net)
    assert summary.opposition.events == config.opposition_events
    assert summary.collaboration.events == config.collaboration_events
    assert summary.total_nodes == config.node_count
    assert len(net.nodes) == config.node_count


def test_zero_event_configs_allowed():
    net = generate_network(
        SynthConfig(node_count=5, opposition_events=0, collaboration_events=0, seed=0)
    )
    assert net.opposition.events == ()
    assert net.collaboration.events == ()
    assert len(net.nodes) == 5


def test_timestamps_stay_inside_span():
    config = SynthConfig(span_days=400, opposition_events=300, seed=4)
    net = generate_network(config)
    for event in net.opposition.events + net.collaboration.events:
        assert 0 <= event.t <= config.span_days


def test_no_self_loops():
    net = generate_network(SynthConfig(seed=6))
    for event in net.opposition.events + net.collaboration.events:
        assert event.source != event.target


def test_attribute_table_covers_every_node_and_is_heavy_tailed():
    net = generate_network(SynthConfig(node_count=400, seed=13))
    assert net.attributes is not None
    assert set(net.attributes) == set(net.nodes)
    values = list(net.attributes.values())
    assert min(values) >= 0
    assert statistics.fmean(values) > statistics.median(values)


def test_activity_is_heavy_tailed():
    net = generate_network(SynthConfig(node_count=200, opposition_events=2000, seed=8))
    per_source: dict[str, int] = {}
    for event in net.opposition.events:
        per_source[event.source] = per_source.get(event.source, 0) + 1
    counts = sorted(per_source.values(), reverse=True)
    # the busiest source should dwarf the median active source
    assert counts[0] >= 5 * counts[len(counts) // 2]


def test_bursts_inflate_repeat_motifs():
    base = dict(node_count=60, opposition_events=400, span_days=7300, seed=21)
    calm = generate_network(SynthConfig(burst_prob=0.0, **base))
    bursty = generate_network(SynthConfig(burst_prob=0.8, **base))
    thresholds = Thresholds(90, 90)
    calm_r = census(calm.opposition, 2, thresholds).counts["R"]
    bursty_r = census(bursty.opposition, 2, thresholds).counts["R"]
    assert bursty_r > 2 * calm_r


def test_round_trip_through_files():
    net = generate_network(SynthConfig(node_count=20, opposition_events=50,
                                       collaboration_events=10, seed=77))
    opp_buf, collab_buf, attr_buf = io.StringIO(), io.StringIO(), io.StringIO()
    write_event_file(net.opposition, opp_buf)
    write_event_file(net.collaboration, collab_buf)
    assert net.attributes is not None
    write_attribute_file(net.attributes, attr_buf)
    opp = parse_event_file(io.StringIO(opp_buf.getvalue()), directed=True)
    collab = parse_event_file(io.StringIO(collab_buf.getvalue()), directed=False)
    attrs = parse_attribute_file(io.StringIO(attr_buf.getvalue()))
    assert opp.events == net.opposition.events
    assert collab.events == net.collaboration.events
    assert attrs == net.attributes


def test_node_names_are_stable_width():
    net = generate_network(SynthConfig(node_count=12, opposition_events=5, seed=0))
    assert all(len(name) == 5 and name.startswith("C") for name in net.nodes)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"node_count": 1},
        {"opposition_events": -1},
        {"collaboration_events": -5},
        {"span_days": 0},
        {"burst_prob": 1.5},
        {"burst_prob": -0.1},
        {"activity_exponent": 1.0},
        {"attr_exponent": 0.5},
    ],
)
def test_config_validation(kwargs):
    with pytest.raises(ValidationError):
        SynthConfig(**kwargs)
