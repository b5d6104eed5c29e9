"""Temporal motif census, null-model significance, and overlay analysis.

Library for two-layer event networks: a directed opposition layer and an
undirected collaboration layer, both time-stamped at day resolution.
"""

from .attrstats import (
    AttributeDistribution,
    PositionStats,
    attribute_distribution,
    position_stats_static,
    position_stats_temporal,
)
from .durations import format_duration, parse_duration
from .errors import (
    ClassificationError,
    MotifCensusError,
    ParseError,
    ValidationError,
)
from .events import (
    Event,
    LayerStats,
    NetworkSummary,
    TemporalLayer,
    TwoLayerNetwork,
    build_network,
    day_from_iso,
    iso_from_day,
    layer_summary,
    make_layer,
    parse_attribute_file,
    parse_event_file,
    write_attribute_file,
    write_event_file,
)
from .motifs import (
    CensusResult,
    MotifInstance,
    PairClass,
    StaticGraph,
    Thresholds,
    TripleClass,
    binned_census,
    census,
    class_labels,
    classify_pair,
    classify_triple,
    enumerate_motifs,
    enumerate_static_instances,
    static_census,
    static_projection,
)
from .nullmodels import (
    ConservationReport,
    NullModel,
    derive_seed,
    sample_layers,
    shuffle,
    verify_conservation,
)
from .overlay import (
    OverlayRecord,
    PadWindow,
    attach_collaborations,
    collab_count_distribution,
    collab_pair_fractions,
    collab_timing_fractions,
    collab_timing_per_year,
)
from .significance import (
    ClassScore,
    RankedClasses,
    ZReport,
    rank_classes,
    z_scores,
)
from .synth import SynthConfig, generate_network

__version__ = "0.1.0"

__all__ = [
    "AttributeDistribution",
    "CensusResult",
    "ClassScore",
    "ClassificationError",
    "ConservationReport",
    "Event",
    "LayerStats",
    "MotifCensusError",
    "MotifInstance",
    "NetworkSummary",
    "NullModel",
    "OverlayRecord",
    "PadWindow",
    "PairClass",
    "ParseError",
    "PositionStats",
    "RankedClasses",
    "StaticGraph",
    "SynthConfig",
    "TemporalLayer",
    "Thresholds",
    "TripleClass",
    "TwoLayerNetwork",
    "ValidationError",
    "ZReport",
    "attach_collaborations",
    "attribute_distribution",
    "binned_census",
    "build_network",
    "census",
    "class_labels",
    "day_from_iso",
    "classify_pair",
    "classify_triple",
    "collab_count_distribution",
    "collab_pair_fractions",
    "collab_timing_fractions",
    "collab_timing_per_year",
    "derive_seed",
    "enumerate_motifs",
    "enumerate_static_instances",
    "format_duration",
    "generate_network",
    "iso_from_day",
    "layer_summary",
    "make_layer",
    "parse_attribute_file",
    "parse_duration",
    "parse_event_file",
    "position_stats_static",
    "position_stats_temporal",
    "rank_classes",
    "sample_layers",
    "shuffle",
    "static_census",
    "static_projection",
    "verify_conservation",
    "write_attribute_file",
    "write_event_file",
    "z_scores",
]
