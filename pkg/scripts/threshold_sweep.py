"""Sweep the gap and window bounds and watch the census respond.

For a ladder of thresholds, prints per-class counts with both bounds
tied (dc = dw), then the binned view that partitions the top census by
inter-event gap. Useful for picking a threshold that separates genuine
reactions from background coincidence.

Usage:
    python scripts/threshold_sweep.py --seed 7 --ladder 3m,1y,2y,5y,10y
"""

from __future__ import annotations

import argparse
import sys

from motifcensus import (
    SynthConfig,
    Thresholds,
    binned_census,
    census,
    class_labels,
    format_duration,
    generate_network,
    parse_duration,
    parse_event_file,
)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--opposition", help="directed event CSV (default: synthesize)")
    parser.add_argument("--nodes", type=int, default=120)
    parser.add_argument("--ops", type=int, default=800)
    parser.add_argument("--burst-prob", type=float, default=0.4)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--events", type=int, choices=(2, 3), default=2)
    parser.add_argument("--ladder", default="3m,1y,2y,5y,10y",
                        help="comma-separated ascending durations")
    parser.add_argument("--bin-mode", choices=("gap", "window"), default="gap")
    args = parser.parse_args(argv)

    if args.opposition:
        with open(args.opposition, newline="") as stream:
            layer = parse_event_file(stream, directed=True)
    else:
        layer = generate_network(
            SynthConfig(node_count=args.nodes, opposition_events=args.ops,
                        collaboration_events=0, burst_prob=args.burst_prob,
                        seed=args.seed)
        ).opposition

    ladder = [parse_duration(part) for part in args.ladder.split(",")]
    if any(days is None for days in ladder):
        parser.error("ladder entries must be finite durations")
    labels = class_labels(args.events)
    shown = labels if args.events == 2 else None  # 36 columns would not fit

    print(f"events={args.events}  layer: {layer.event_count} events"
          f" on {len(layer.nodes)} nodes")
    print("\n== cumulative census, dc = dw ==")
    if shown:
        print("  " + f"{'bound':>8s}  " + "".join(f"{lab:>8s}" for lab in shown) + f"{'total':>10s}")
    for days in ladder:
        assert days is not None
        result = census(layer, args.events, Thresholds(days, days))
        if shown:
            row = "".join(f"{result.counts[lab]:>8d}" for lab in shown)
            print(f"  {format_duration(days):>8s}  {row}{result.total:>10d}")
        else:
            print(f"  {format_duration(days):>8s}  total={result.total}")

    print(f"\n== per-bin census, {args.bin_mode} mode ==")
    bins = binned_census(layer, args.events, [d for d in ladder if d], args.bin_mode)
    for result in bins:
        assert result.bin_edges is not None
        lo, hi = result.bin_edges
        label = f"({format_duration(lo)}, {format_duration(hi)}]"
        if shown:
            row = "".join(f"{result.counts[lab]:>8d}" for lab in shown)
            print(f"  {label:>16s}  {row}{result.total:>10d}")
        else:
            top = sorted(result.counts.items(), key=lambda kv: -kv[1])[:5]
            cells = "  ".join(f"{lab}:{n}" for lab, n in top if n)
            print(f"  {label:>16s}  total={result.total}  top: {cells}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
