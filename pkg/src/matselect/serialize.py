"""Canonical JSON documents for predictions and pipeline results.

The CLI and the HTTP service emit these byte-for-byte identically, so the
formatting rules live in one place: two-space indentation, insertion-ordered
keys, scores rounded to 10 decimal places, non-finite numbers rendered as
null (JSON has no infinities), and a single trailing newline.
"""

from __future__ import annotations

import json
import math

from .bayes import ClassPrediction
from .pipeline import PipelineResult

SCORE_DECIMALS = 10


def round_score(value: float | None) -> float | None:
    if value is None or not math.isfinite(value):
        return None
    rounded = round(float(value), SCORE_DECIMALS)
    return 0.0 if rounded == 0 else rounded  # never emit -0.0


def prediction_document(pred: ClassPrediction) -> dict:
    return {
        "predicted": pred.predicted,
        "posteriors": {label: round_score(p) for label, p in pred.posteriors.items()},
        "log_scores": {label: round_score(s) for label, s in pred.log_scores.items()},
    }


def results_document(results) -> list[dict]:
    return [
        {
            "material_id": res.material_id,
            "r": round_score(res.r),
            "status": res.status.value,
            "rank": res.rank,
        }
        for res in results
    ]


def pipeline_document(result: PipelineResult) -> dict:
    comparison = None
    if result.comparison is not None:
        comparison = [
            {
                "attribute": row.attribute,
                "unit": row.unit,
                "requirement": round_score(row.requirement),
                "material": round_score(row.material),
            }
            for row in result.comparison
        ]
    return {
        "prediction": prediction_document(result.prediction),
        "class_member_count": result.class_member_count,
        "results": results_document(result.results),
        "optimal": result.optimal,
        "comparison": comparison,
    }


def to_json(doc) -> str:
    """Render a document in the canonical byte form (ends with a newline)."""
    return json.dumps(doc, indent=2, ensure_ascii=False, allow_nan=False) + "\n"
