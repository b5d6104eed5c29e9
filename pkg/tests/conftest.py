"""Shared fixtures: the worked toy network, random layers, gate reporting."""

from __future__ import annotations

import numpy as np
import pytest

from motifcensus import Event, build_network, make_layer

T1, T2, T3 = 100, 200, 300


def pytest_configure(config):
    config.addinivalue_line(
        "markers",
        "criterion(number, title): release-gate check, echoed as a visible status line",
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call":
        return
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    status = "PASS" if report.passed else ("SKIP" if report.skipped else "FAIL")
    reporter = item.config.pluginmanager.getplugin("terminalreporter")
    if reporter is not None:
        reporter.ensure_newline()
        reporter.write_line(f"[criterion {number}] {status} - {title}")


@pytest.fixture
def toy_network():
    """Three oppositions A->B, B->A, B->C (last two tied in time) plus
    one A-C collaboration between the first and last opposition."""
    opposition = make_layer(
        [Event("A", "B", T1), Event("B", "A", T3), Event("B", "C", T3)],
        directed=True,
    )
    collaboration = make_layer(
        [Event("A", "C", T2, layer="collaboration")],
        directed=False,
    )
    return build_network(opposition, collaboration)


def random_event_triples(rng: np.random.Generator, max_events=60, max_nodes=15):
    """Raw (source, target, t) triples for a random directed layer."""
    n = int(rng.integers(2, max_nodes + 1))
    count = int(rng.integers(1, max_events + 1))
    horizon = int(rng.integers(10, 2001))
    names = [f"N{i}" for i in range(n)]
    triples = []
    for _ in range(count):
        while True:
            a, b = rng.integers(n, size=2)
            if a != b:
                break
        triples.append((names[int(a)], names[int(b)], int(rng.integers(horizon))))
    return triples


def random_layer(rng: np.random.Generator, max_events=60, max_nodes=15):
    triples = random_event_triples(rng, max_events, max_nodes)
    return make_layer([Event(s, t, d) for s, t, d in triples], directed=True), triples


def random_thresholds(rng: np.random.Generator, horizon=2000):
    """(delta_c, delta_w) with None sprinkled in and dc <= dw kept."""
    dc = None if rng.random() < 0.25 else int(rng.integers(horizon + 1))
    dw = None if rng.random() < 0.25 else int(rng.integers(horizon + 1))
    if dc is not None and dw is not None and dc > dw:
        dc, dw = dw, dc
    return dc, dw
