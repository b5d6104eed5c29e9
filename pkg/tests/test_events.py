"""Event model, parsing, indexing, and summaries."""

import io

import pytest
from hypothesis import given
from hypothesis import strategies as st

from motifcensus import (
    Event,
    ParseError,
    ValidationError,
    build_network,
    day_from_iso,
    iso_from_day,
    layer_summary,
    make_layer,
    parse_attribute_file,
    parse_event_file,
    write_event_file,
)
from motifcensus.events import COLLABORATION, OPPOSITION


def test_day_arithmetic_known_date():
    assert day_from_iso("1970-01-01") == 0
    assert day_from_iso("1981-02-25") == 4073
    assert day_from_iso("1969-12-31") == -1


@given(st.integers(min_value=-30000, max_value=60000))
def test_day_iso_round_trip(day):
    assert day_from_iso(iso_from_day(day)) == day


def test_event_rejects_self_relation():
    with pytest.raises(ValidationError):
        Event("A", "A", 1)


def test_event_rejects_empty_id():
    with pytest.raises(ValidationError):
        Event("", "B", 1)


def test_event_rejects_unknown_layer():
    with pytest.raises(ValidationError):
        Event("A", "B", 1, layer="sideways")


def test_collaboration_event_normalizes_endpoints():
    e = Event("B", "A", 5, layer=COLLABORATION)
    assert (e.source, e.target) == ("A", "B")
    assert e == Event("A", "B", 5, layer=COLLABORATION)


def test_opposition_event_keeps_direction():
    e = Event("B", "A", 5)
    assert (e.source, e.target) == ("B", "A")


def test_parse_directed_basic():
    layer = parse_event_file(io.StringIO("source,target,date\nA,B,1981-02-25\n"), directed=True)
    assert layer.events == (Event("A", "B", 4073),)
    assert layer.edge_index == {("A", "B"): (4073,)}


def test_parse_undirected_normalizes():
    layer = parse_event_file(io.StringIO("node_a,node_b,date\nB,A,2018-01-10\n"), directed=False)
    (event,) = layer.events
    assert (event.source, event.target) == ("A", "B")
    assert event.t == day_from_iso("2018-01-10")


def test_parse_rejects_self_loop_with_line_number():
    stream = io.StringIO("source,target,date\nA,B,2000-01-01\nA,A,2000-01-01\n")
    with pytest.raises(ParseError, match="line 3"):
        parse_event_file(stream, directed=True)


def test_parse_rejects_malformed_date_with_line_number():
    stream = io.StringIO("source,target,date\nA,B,01/02/2000\n")
    with pytest.raises(ParseError, match="line 2"):
        parse_event_file(stream, directed=True)


def test_parse_rejects_missing_column():
    with pytest.raises(ParseError, match="target"):
        parse_event_file(io.StringIO("source,date\nA,2000-01-01\n"), directed=True)


def test_parse_rejects_empty_input():
    with pytest.raises(ParseError):
        parse_event_file(io.StringIO(""), directed=True)


def test_parse_ignores_extra_columns_and_order():
    stream = io.StringIO("id,date,target,source\n7,2000-01-01,B,A\n")
    layer = parse_event_file(stream, directed=True)
    assert layer.events[0].edge == ("A", "B")


def test_parse_keeps_duplicate_rows_as_events():
    stream = io.StringIO("source,target,date\nA,B,2000-01-01\nA,B,2000-01-01\n")
    layer = parse_event_file(stream, directed=True)
    assert layer.event_count == 2
    assert layer.edge_count == 1


def test_events_sorted_and_indexed():
    layer = make_layer(
        [Event("B", "C", 5), Event("A", "B", 1), Event("B", "C", 2)], directed=True
    )
    assert [e.t for e in layer.events] == [1, 2, 5]
    assert layer.edge_index[("B", "C")] == (2, 5)


def test_make_layer_rejects_mismatched_layer_label():
    with pytest.raises(ValidationError):
        make_layer([Event("A", "B", 1, layer=COLLABORATION)], directed=True)


def test_tie_break_is_lexicographic():
    layer = make_layer(
        [Event("B", "A", 7), Event("A", "B", 7), Event("A", "C", 7)], directed=True
    )
    assert [e.edge for e in layer.events] == [("A", "B"), ("A", "C"), ("B", "A")]


events_strategy = st.lists(
    st.tuples(
        st.integers(min_value=0, max_value=6),
        st.integers(min_value=0, max_value=6),
        st.integers(min_value=-1000, max_value=1000),
    ).filter(lambda e: e[0] != e[1]),
    max_size=40,
)


@given(events_strategy)
def test_round_trip_preserves_event_multiset(triples):
    events = [Event(f"N{a}", f"N{b}", t) for a, b, t in triples]
    layer = make_layer(events, directed=True)
    buffer = io.StringIO()
    write_event_file(layer, buffer)
    buffer.seek(0)
    reparsed = parse_event_file(buffer, directed=True)
    assert sorted(e.sort_key for e in reparsed.events) == sorted(e.sort_key for e in events)


@given(events_strategy)
def test_edge_index_timeline_lengths_sum_to_event_count(triples):
    layer = make_layer([Event(f"N{a}", f"N{b}", t) for a, b, t in triples], directed=True)
    assert sum(len(ts) for ts in layer.edge_index.values()) == layer.event_count
    for edge, timeline in layer.edge_index.items():
        assert list(timeline) == sorted(timeline)
        assert layer.nodes >= set(edge)


def test_build_network_node_union():
    opp = make_layer([Event("A", "B", 1)], directed=True)
    collab = make_layer([Event("B", "C", 2, layer=COLLABORATION)], directed=False)
    net = build_network(opp, collab, {"D": 5})
    assert net.nodes == {"A", "B", "C", "D"}
    assert net.attribute("D") == 5
    assert net.attribute("A") is None


def test_build_network_empty_layers_valid():
    net = build_network(make_layer((), directed=True))
    assert net.nodes == frozenset()
    assert net.collaboration.event_count == 0
    assert not net.has_attributes


def test_build_network_rejects_swapped_layers():
    undirected = make_layer((), directed=False)
    directed = make_layer((), directed=True)
    with pytest.raises(ValidationError):
        build_network(undirected, directed)


def test_build_network_rejects_negative_attribute():
    with pytest.raises(ValidationError):
        build_network(make_layer((), directed=True), attributes={"A": -1})


def test_layer_summary_toy(toy_network):
    summary = layer_summary(toy_network)
    assert summary.opposition.nodes == 3
    assert summary.opposition.edges == 3
    assert summary.opposition.events == 3
    assert summary.collaboration.edges == 1
    assert summary.collaboration.events == 1
    assert summary.total_nodes == 3
    assert summary.opposition.start == 100
    assert summary.opposition.end == 300


def test_layer_summary_multi_event_edge():
    opp = make_layer([Event("A", "B", 1), Event("A", "B", 2)], directed=True)
    stats = layer_summary(build_network(opp)).opposition
    assert (stats.edges, stats.events) == (1, 2)


def test_layer_summary_empty():
    stats = layer_summary(build_network(make_layer((), directed=True))).opposition
    assert (stats.nodes, stats.edges, stats.events) == (0, 0, 0)
    assert stats.start is None and stats.end is None


def test_parse_attribute_file():
    attrs = parse_attribute_file(io.StringIO("node,patent_count\nA,5\nB,0\n"))
    assert attrs == {"A": 5, "B": 0}


def test_parse_attribute_file_rejects_duplicates():
    with pytest.raises(ParseError, match="line 3"):
        parse_attribute_file(io.StringIO("node,patent_count\nA,5\nA,6\n"))


def test_parse_attribute_file_rejects_negative():
    with pytest.raises(ParseError, match="line 2"):
        parse_attribute_file(io.StringIO("node,patent_count\nA,-2\n"))


def test_opposition_layer_label_constant():
    assert Event("A", "B", 1).layer == OPPOSITION
