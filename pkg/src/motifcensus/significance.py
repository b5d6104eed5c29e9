"""Motif-class significance against a null-model ensemble.

For each class: z = (original - mean) / std over the null sample counts,
with population std (divisor = sample count). A zero-variance class has
no z score; it is carried as None and serialized as empty/null, never as
NaN or infinity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import ValidationError
from .events import TemporalLayer
from .motifs import Thresholds, census, class_labels
from .nullmodels import NullModel, derive_seed, shuffle


@dataclass(frozen=True)
class ClassScore:
    motif_class: str
    original: int
    mu: float
    sigma: float
    z: float | None


@dataclass(frozen=True)
class ZReport:
    m: int
    thresholds: Thresholds
    model: NullModel
    samples: int
    seed: int
    scores: tuple[ClassScore, ...]

    def score(self, label: str) -> ClassScore:
        for s in self.scores:
            if s.motif_class == label:
                return s
        raise KeyError(label)


def score_class(
    label: str, original: int, null_counts: Sequence[int], sample_std: bool = False
) -> ClassScore:
    """Summarize one class; sample_std switches the divisor to n - 1."""
    n = len(null_counts)
    if n < 1:
        raise ValidationError("need at least one null sample")
    if sample_std and n < 2:
        raise ValidationError("sample std needs at least two null samples")
    mu = sum(null_counts) / n
    var = sum((x - mu) ** 2 for x in null_counts) / (n - 1 if sample_std else n)
    sigma = math.sqrt(var)
    z = None if sigma == 0.0 else (original - mu) / sigma
    return ClassScore(label, original, mu, sigma, z)


def z_scores(
    layer: TemporalLayer,
    m: int,
    thresholds: Thresholds,
    model: NullModel,
    samples: int,
    seed: int,
    swap_factor: int = 10,
    threads: int | None = None,
    sample_std: bool = False,
) -> ZReport:
    """Census the original layer and `samples` shuffles, then score each class.

    Sample i uses the seed derived from (seed, i), so any sample can be
    reproduced in isolation.
    """
    if samples < 2:
        raise ValidationError("need at least two null samples")
    original = census(layer, m, thresholds, threads)
    labels = class_labels(m)
    null_counts: dict[str, list[int]] = {lab: [] for lab in labels}
    for i in range(samples):
        shuffled = shuffle(layer, model, derive_seed(seed, i), swap_factor)
        result = census(shuffled, m, thresholds, threads)
        for lab in labels:
            null_counts[lab].append(result.counts[lab])
    scores = tuple(
        score_class(lab, original.counts[lab], null_counts[lab]) for lab in labels
    )
    return ZReport(m, thresholds, model, samples, seed, scores)


MOST = "most"
LEAST = "least"


@dataclass(frozen=True)
class RankedClasses:
    """Top/bottom classes by z, plus the classes whose z is undefined."""

    ranked: tuple[ClassScore, ...]
    undefined: tuple[str, ...]


def rank_classes(report: ZReport, direction: str = MOST, k: int | None = None) -> RankedClasses:
    """Classes by z, descending for `most` over-represented, ascending for `least`.

    Undefined-z classes never rank; they are returned separately. Ties
    break on class label so the ranking is deterministic. k = None
    returns the full ordering.
    """
    if direction not in (MOST, LEAST):
        raise ValidationError(f"direction must be {MOST!r} or {LEAST!r}")
    defined = [s for s in report.scores if s.z is not None]
    sign = -1.0 if direction == MOST else 1.0
    ranked = sorted(defined, key=lambda s: (sign * s.z, s.motif_class))
    undefined = tuple(s.motif_class for s in report.scores if s.z is None)
    return RankedClasses(tuple(ranked if k is None else ranked[:k]), undefined)
