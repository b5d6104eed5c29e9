"""Command-line surface: one machine-readable table per command."""

from __future__ import annotations

import argparse
import sys

from . import attrstats, overlay
from .durations import parse_duration
from .errors import MotifCensusError, ValidationError
from .events import (
    TwoLayerNetwork,
    build_network,
    iso_from_day,
    layer_summary,
    make_layer,
    parse_attribute_file,
    parse_event_file,
    write_attribute_file,
    write_event_file,
)
from .motifs import (
    STATIC_CLASSES,
    Thresholds,
    binned_census,
    census,
    class_labels,
    static_census,
    static_projection,
)
from .nullmodels import NullModel, shuffle
from .overlay import PAIR_KINDS, TIMINGS, PadWindow
from .significance import z_scores
from .synth import SynthConfig, generate_network
from .tables import FORMATS, Table


def _read_layer(path: str, directed: bool):
    with open(path, newline="") as stream:
        return parse_event_file(stream, directed)


def _read_attrs(path: str) -> dict[str, int]:
    with open(path, newline="") as stream:
        return parse_attribute_file(stream)


def _load_network(args: argparse.Namespace) -> TwoLayerNetwork:
    if getattr(args, "opposition", None):
        opposition = _read_layer(args.opposition, directed=True)
    else:
        opposition = make_layer((), directed=True)
    collab = None
    if getattr(args, "collab", None):
        collab = _read_layer(args.collab, directed=False)
    attrs = None
    if getattr(args, "attrs", None):
        attrs = _read_attrs(args.attrs)
    return build_network(opposition, collab, attrs)


def _thresholds(args: argparse.Namespace) -> Thresholds:
    return Thresholds(parse_duration(args.dc), parse_duration(args.dw))


def _finite_duration(text: str, flag: str) -> int:
    days = parse_duration(text)
    if days is None:
        raise ValidationError(f"{flag} must be a finite duration")
    return days


def _emit(table: Table, args: argparse.Namespace) -> int:
    if args.out:
        with open(args.out, "w", newline="") as stream:
            table.write(stream, args.format)
    else:
        table.write(sys.stdout, args.format)
    return 0


def _blank_if_none(day: int | None) -> str | None:
    return None if day is None else iso_from_day(day)


def _summary_table(network: TwoLayerNetwork) -> Table:
    summary = layer_summary(network)
    rows = []
    for name, stats in (("opposition", summary.opposition), ("collaboration", summary.collaboration)):
        rows.append(
            (name, stats.nodes, stats.edges, stats.events,
             _blank_if_none(stats.start), _blank_if_none(stats.end))
        )
    rows.append(("network", summary.total_nodes, None, None, None, None))
    return Table(("layer", "nodes", "edges", "events", "start", "end"), rows)


def cmd_summary(args: argparse.Namespace) -> int:
    return _emit(_summary_table(_load_network(args)), args)


def _cmd_census(args: argparse.Namespace, m: int) -> int:
    layer = _read_layer(args.opposition, directed=True)
    result = census(layer, m, _thresholds(args), args.threads)
    rows = [(label, result.counts[label]) for label in class_labels(m)]
    return _emit(Table(("class", "count"), rows), args)


def cmd_census2(args: argparse.Namespace) -> int:
    return _cmd_census(args, 2)


def cmd_census3(args: argparse.Namespace) -> int:
    return _cmd_census(args, 3)


def cmd_census_bins(args: argparse.Namespace) -> int:
    layer = _read_layer(args.opposition, directed=True)
    boundaries = [_finite_duration(part, "--bins") for part in args.bins.split(",") if part.strip()]
    results = binned_census(layer, args.events, boundaries, args.bin_mode, args.threads)
    rows = []
    for result in results:
        assert result.bin_edges is not None
        lo, hi = result.bin_edges
        for label in class_labels(args.events):
            rows.append((lo, hi, label, result.counts[label]))
    return _emit(Table(("bin_lo_days", "bin_hi_days", "class", "count"), rows), args)


def cmd_static_census(args: argparse.Namespace) -> int:
    layer = _read_layer(args.opposition, directed=True)
    counts = static_census(static_projection(layer))
    rows = [(pattern, counts[pattern]) for pattern in STATIC_CLASSES]
    return _emit(Table(("pattern", "count"), rows), args)


def cmd_null_sample(args: argparse.Namespace) -> int:
    layer = _read_layer(args.opposition, directed=True)
    shuffled = shuffle(layer, NullModel(args.model), args.seed, args.swap_factor)
    rows = [(e.source, e.target, iso_from_day(e.t)) for e in shuffled.events]
    return _emit(Table(("source", "target", "date"), rows), args)


def cmd_zscore(args: argparse.Namespace) -> int:
    layer = _read_layer(args.opposition, directed=True)
    report = z_scores(
        layer,
        args.events,
        _thresholds(args),
        NullModel(args.model),
        args.samples,
        args.seed,
        swap_factor=args.swap_factor,
        threads=args.threads,
        sample_std=(args.std == "sample"),
    )
    rows = [(s.motif_class, s.original, s.mu, s.sigma, s.z) for s in report.scores]
    return _emit(Table(("class", "original", "mu", "sigma", "z"), rows), args)


def _fraction_cells(fractions, keys) -> tuple:
    if fractions is None:
        return tuple(None for _ in keys)
    return tuple(fractions[k] for k in keys)


def cmd_overlay(args: argparse.Namespace) -> int:
    network = _load_network(args)
    pad = PadWindow(_finite_duration(args.pad, "--pad"))
    overlays = list(
        overlay.attach_collaborations(network, args.events, _thresholds(args), pad)
    )
    if args.table == "count":
        rows = [
            (d.motif_class, d.instances, *_fraction_cells(d.fractions, overlay.COUNT_BUCKETS))
            for d in overlay.collab_count_distribution(overlays, args.events)
        ]
        header = ("class", "instances", "frac_0", "frac_1", "frac_2", "frac_3plus")
        return _emit(Table(header, rows), args)
    kind_cols = ("first_opposition", "second_opposition", "no_opposition")
    if args.table == "pairs":
        fractions = overlay.collab_pair_fractions(overlays)
        rows = [
            (label, *_fraction_cells(fractions[label], PAIR_KINDS))
            for label in overlay.THREE_NODE_PAIR_LABELS
        ]
        return _emit(Table(("class", *kind_cols), rows), args)
    header = ("class",) + tuple(f"{k}_{t}" for k in kind_cols for t in TIMINGS)
    if args.table == "timing":
        cells = overlay.collab_timing_fractions(overlays)
    else:
        span = network.collaboration.span() if args.clip_intervals == "on" else None
        cells = overlay.collab_timing_per_year(overlays, pad, span)
    rows = []
    for label in overlay.THREE_NODE_PAIR_LABELS:
        row: list = [label]
        for kind in PAIR_KINDS:
            row.extend(_fraction_cells(cells[(label, kind)], TIMINGS))
        rows.append(tuple(row))
    return _emit(Table(header, rows), args)


def _attr_rows(stats) -> list[tuple]:
    return [(s.motif_class, s.position, s.count, s.mean, s.median, s.std) for s in stats]


_ATTR_HEADER = ("class", "position", "count", "mean", "median", "std")


def cmd_attr_temporal(args: argparse.Namespace) -> int:
    network = _load_network(args)
    stats = attrstats.position_stats_temporal(network, _thresholds(args))
    return _emit(Table(_ATTR_HEADER, _attr_rows(stats)), args)


def cmd_attr_static(args: argparse.Namespace) -> int:
    network = _load_network(args)
    stats = attrstats.position_stats_static(network)
    return _emit(Table(_ATTR_HEADER, _attr_rows(stats)), args)


def cmd_attr_dist(args: argparse.Namespace) -> int:
    network = _load_network(args)
    dist = attrstats.attribute_distribution(network)
    rows: list[tuple] = [
        ("count", None, None, dist.count),
        ("mean", None, None, dist.mean),
        ("median", None, None, dist.median),
        ("min", None, None, dist.minimum),
        ("max", None, None, dist.maximum),
    ]
    rows.extend(("bin", lo, hi, n) for lo, hi, n in dist.histogram)
    return _emit(Table(("stat", "bin_lo", "bin_hi", "value"), rows), args)


def cmd_synth(args: argparse.Namespace) -> int:
    config = SynthConfig(
        node_count=args.nodes,
        opposition_events=args.ops,
        collaboration_events=args.collabs,
        span_days=_finite_duration(args.span, "--span"),
        activity_exponent=args.activity_exponent,
        burst_prob=args.burst_prob,
        attr_exponent=args.attr_exponent,
        seed=args.seed,
    )
    network = generate_network(config)
    prefix = args.out_prefix
    with open(f"{prefix}-opposition.csv", "w", newline="") as stream:
        write_event_file(network.opposition, stream)
    with open(f"{prefix}-collaboration.csv", "w", newline="") as stream:
        write_event_file(network.collaboration, stream)
    assert network.attributes is not None
    with open(f"{prefix}-attributes.csv", "w", newline="") as stream:
        write_attribute_file(network.attributes, stream)
    return _emit(_summary_table(network), args)


def _add_output_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=FORMATS, default="csv")
    parser.add_argument("--out", help="write the table here instead of stdout")


def _add_threshold_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--dc", default="inf", help="gap bound, e.g. 10y, 18m, 100d, inf")
    parser.add_argument("--dw", default="inf", help="window bound, same syntax as --dc")


def _add_threads_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--threads", type=int, default=None,
                        help="census worker threads (default: all available)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="motifcensus",
        description="Temporal motif census, null models, and overlay analysis",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, **kwargs) -> argparse.ArgumentParser:
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=func)
        _add_output_flags(p)
        return p

    p = add("summary", cmd_summary, help="layer and network size summary")
    p.add_argument("--opposition", required=True)
    p.add_argument("--collab")
    p.add_argument("--attrs")

    for name, func in (("census2", cmd_census2), ("census3", cmd_census3)):
        p = add(name, func, help=f"{name[-1]}-event motif census")
        p.add_argument("--opposition", required=True)
        _add_threshold_flags(p)
        _add_threads_flag(p)

    p = add("census-bins", cmd_census_bins, help="census per threshold bin")
    p.add_argument("--opposition", required=True)
    p.add_argument("--events", type=int, choices=(2, 3), default=2)
    p.add_argument("--bins", required=True, help="ascending duration list, e.g. 1y,2y,5y,10y")
    p.add_argument("--bin-mode", choices=("gap", "window"), default="gap")
    _add_threads_flag(p)

    p = add("static-census", cmd_static_census, help="two-edge static pattern census")
    p.add_argument("--opposition", required=True)

    p = add("null-sample", cmd_null_sample, help="emit one shuffled layer")
    p.add_argument("--opposition", required=True)
    p.add_argument("--model", choices=[m.value for m in NullModel], required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--swap-factor", type=int, default=10)

    p = add("zscore", cmd_zscore, help="motif z scores against a null model")
    p.add_argument("--opposition", required=True)
    p.add_argument("--events", type=int, choices=(2, 3), default=2)
    _add_threshold_flags(p)
    p.add_argument("--model", choices=[m.value for m in NullModel], required=True)
    p.add_argument("--samples", type=int, default=10)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--swap-factor", type=int, default=10)
    p.add_argument("--std", choices=("population", "sample"), default="population")
    _add_threads_flag(p)

    p = add("overlay", cmd_overlay, help="collaboration overlay tables")
    p.add_argument("--opposition", required=True)
    p.add_argument("--collab", required=True)
    p.add_argument("--events", type=int, choices=(2, 3), default=2)
    _add_threshold_flags(p)
    p.add_argument("--pad", default="10y")
    p.add_argument("--table", choices=("count", "pairs", "timing", "per-year"), default="count")
    p.add_argument("--clip-intervals", choices=("on", "off"), default="on")

    p = add("attr-temporal", cmd_attr_temporal, help="attribute stats per temporal position")
    p.add_argument("--opposition", required=True)
    p.add_argument("--attrs", required=True)
    _add_threshold_flags(p)

    p = add("attr-static", cmd_attr_static, help="attribute stats per static position")
    p.add_argument("--opposition", required=True)
    p.add_argument("--attrs", required=True)

    p = add("attr-dist", cmd_attr_dist, help="attribute distribution summary")
    p.add_argument("--attrs", required=True)
    p.add_argument("--opposition")

    p = add("synth", cmd_synth, help="generate a synthetic two-layer network")
    p.add_argument("--nodes", type=int, default=100)
    p.add_argument("--ops", type=int, default=500)
    p.add_argument("--collabs", type=int, default=30)
    p.add_argument("--span", default="7300", help="observation span as a duration")
    p.add_argument("--activity-exponent", type=float, default=2.0)
    p.add_argument("--burst-prob", type=float, default=0.3)
    p.add_argument("--attr-exponent", type=float, default=1.8)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out-prefix", default="synth")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MotifCensusError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
