"""Correlation-based similarity between a requirement and candidate materials.

The degree of similarity is the Pearson correlation coefficient between the
requirement's numeric vector and a material's numeric vector, computed over
the attributes present in both (pairwise-complete alignment). Candidates at
or above the similarity threshold are ranked by descending correlation; the
rank-1 material is the recommended pick. The default threshold is 0.997.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from math import fsum
from operator import mul

from .errors import (
    LengthMismatchError,
    NonFiniteError,
    TooFewQueryAttrsError,
    TooShortError,
)
from .records import DesignRequirement, MaterialRecord
from .schema import Schema

DEFAULT_THRESHOLD = 0.997

#: Variance terms at or below this are treated as a constant vector.
VARIANCE_EPS = 1e-12


class SelectionStatus(str, Enum):
    RANKED = "Ranked"
    BELOW_THRESHOLD = "BelowThreshold"
    UNDEFINED_CORRELATION = "UndefinedCorrelation"
    INSUFFICIENT_OVERLAP = "InsufficientOverlap"


@dataclass(frozen=True)
class AlignedPair:
    attrs: tuple[str, ...]
    x: tuple[float, ...]
    y: tuple[float, ...]

    @property
    def n(self) -> int:
        return len(self.attrs)


@dataclass(frozen=True)
class SelectionParams:
    threshold: float = DEFAULT_THRESHOLD
    min_overlap: int = 3
    top_k: int | None = None
    normalize: bool = False

    def __post_init__(self):
        if not (-1.0 <= self.threshold <= 1.0):
            raise ValueError("threshold must lie in [-1, 1]")
        if self.min_overlap < 3:
            raise ValueError("min_overlap must be at least 3")
        if self.top_k is not None and self.top_k < 1:
            raise ValueError("top_k must be positive when set")


@dataclass(frozen=True)
class SelectionResult:
    material_id: str
    r: float | None
    status: SelectionStatus
    rank: int | None = None


def pearson(x, y) -> float | None:
    """Pearson correlation coefficient of two equal-length vectors.

    Computed in the one-pass sum form

        r = (Sxy - Sx*Sy/n) / sqrt((Sxx - Sx^2/n) * (Syy - Sy^2/n))

    and clamped to [-1, 1] against floating-point overshoot. Returns None
    (undefined) when either variance term is <= VARIANCE_EPS, i.e. when a
    vector is constant.
    """
    x = [float(v) for v in x]
    y = [float(v) for v in y]
    if len(x) != len(y):
        raise LengthMismatchError(len(x), len(y))
    n = len(x)
    if n < 2:
        raise TooShortError(n)
    if not all(map(math.isfinite, x)) or not all(map(math.isfinite, y)):
        raise NonFiniteError()
    sx = fsum(x)
    sy = fsum(y)
    sxx = fsum(map(mul, x, x))
    syy = fsum(map(mul, y, y))
    sxy = fsum(map(mul, x, y))
    var_x = sxx - sx * sx / n
    var_y = syy - sy * sy / n
    if var_x <= VARIANCE_EPS or var_y <= VARIANCE_EPS:
        return None
    r = (sxy - sx * sy / n) / math.sqrt(var_x * var_y)
    return min(1.0, max(-1.0, r))


def align(req: DesignRequirement, material: MaterialRecord, schema: Schema) -> AlignedPair:
    """Pair up the numeric attributes present in both maps, in schema order."""
    attrs = tuple(
        attr.name
        for attr in schema.numeric
        if attr.name in req.numeric and attr.name in material.numeric
    )
    return AlignedPair(
        attrs=attrs,
        x=tuple(req.numeric[a] for a in attrs),
        y=tuple(material.numeric[a] for a in attrs),
    )


def _zscore_stats(candidates, schema: Schema) -> dict[str, tuple[float, float]]:
    stats: dict[str, tuple[float, float]] = {}
    for attr in schema.numeric:
        values = [rec.numeric[attr.name] for rec in candidates if attr.name in rec.numeric]
        if values:
            mean = fsum(values) / len(values)
            std = math.sqrt(fsum((v - mean) ** 2 for v in values) / len(values))
            stats[attr.name] = (mean, std)
    return stats


def rank(
    req: DesignRequirement,
    candidates,
    params: SelectionParams,
    schema: Schema,
) -> list[SelectionResult]:
    """Score every candidate against the requirement and rank the keepers.

    Every candidate gets exactly one result. Candidates sharing fewer than
    ``min_overlap`` numeric attributes with the requirement are flagged
    InsufficientOverlap; constant shared vectors are UndefinedCorrelation;
    defined correlations split into Ranked (r >= threshold, sorted by
    descending r, ties by ascending id) and BelowThreshold. ``top_k`` drops
    ranked entries beyond the k best; other statuses are always reported.

    With ``normalize`` set, values are z-scored per attribute with statistics
    fitted on the candidate set before correlating. The default is raw
    values.
    """
    if len(req.numeric) < params.min_overlap:
        raise TooFewQueryAttrsError(len(req.numeric), params.min_overlap)

    stats = _zscore_stats(candidates, schema) if params.normalize else None

    ranked: list[tuple[float, str]] = []
    below: list[tuple[float, str]] = []
    undefined: list[str] = []
    insufficient: list[str] = []
    for rec in candidates:
        pair = align(req, rec, schema)
        if pair.n < params.min_overlap:
            insufficient.append(rec.id)
            continue
        if stats is None:
            x, y = pair.x, pair.y
        else:
            x = tuple(_z(stats, a, v) for a, v in zip(pair.attrs, pair.x))
            y = tuple(_z(stats, a, v) for a, v in zip(pair.attrs, pair.y))
        r = pearson(x, y)
        if r is None:
            undefined.append(rec.id)
        elif r >= params.threshold:
            ranked.append((r, rec.id))
        else:
            below.append((r, rec.id))

    ranked.sort(key=lambda item: (-item[0], item[1]))
    if params.top_k is not None:
        ranked = ranked[: params.top_k]
    below.sort(key=lambda item: (-item[0], item[1]))

    results = [
        SelectionResult(material_id=mid, r=r, status=SelectionStatus.RANKED, rank=i + 1)
        for i, (r, mid) in enumerate(ranked)
    ]
    results += [
        SelectionResult(material_id=mid, r=r, status=SelectionStatus.BELOW_THRESHOLD)
        for r, mid in below
    ]
    results += [
        SelectionResult(material_id=mid, r=None, status=SelectionStatus.UNDEFINED_CORRELATION)
        for mid in sorted(undefined)
    ]
    results += [
        SelectionResult(material_id=mid, r=None, status=SelectionStatus.INSUFFICIENT_OVERLAP)
        for mid in sorted(insufficient)
    ]
    return results


def _z(stats: dict[str, tuple[float, float]], attr: str, value: float) -> float:
    mean, std = stats[attr]
    return (value - mean) / std if std > 0 else 0.0


def select_optimal(results) -> str | None:
    """The rank-1 material id, or None when nothing is Ranked."""
    for res in results:
        if res.rank == 1:
            return res.material_id
    return None
