"""End-to-end discovery: classify, filter to the predicted class, rank, pick.

The flow mirrors how a design engineer works the problem: the categorical
part of the requirement predicts a material class, the candidate pool is
restricted to that class, candidates are ranked by correlation similarity
over the numeric part, and the rank-1 material is recommended along with an
attribute-by-attribute comparison against the requirement.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bayes import ClassPrediction, TrainedModel
from .errors import SchemaMismatchError
from .records import Dataset, DesignRequirement, MaterialRecord, validate_requirement
from .schema import Schema
from .similarity import SelectionParams, SelectionResult, rank, select_optimal


@dataclass(frozen=True)
class ComparisonRow:
    attribute: str
    unit: str
    requirement: float
    material: float


@dataclass(frozen=True)
class PipelineResult:
    prediction: ClassPrediction
    class_member_count: int
    results: tuple[SelectionResult, ...]
    optimal: str | None
    comparison: tuple[ComparisonRow, ...] | None


def compare(req: DesignRequirement, material: MaterialRecord, schema: Schema) -> tuple[ComparisonRow, ...]:
    """Requirement value vs material value for every shared numeric attribute."""
    return tuple(
        ComparisonRow(
            attribute=attr.name,
            unit=attr.unit,
            requirement=req.numeric[attr.name],
            material=material.numeric[attr.name],
        )
        for attr in schema.numeric
        if attr.name in req.numeric and attr.name in material.numeric
    )


def discover(
    model: TrainedModel,
    data: Dataset,
    req: DesignRequirement,
    params: SelectionParams = SelectionParams(),
) -> PipelineResult:
    """Run the full classify-filter-rank-select flow for one requirement.

    Records without a class label never become candidates: they cannot be
    class-filtered.
    """
    if model.schema.fingerprint() != data.schema.fingerprint():
        raise SchemaMismatchError()
    req = validate_requirement(req, model.schema, require_categorical=True)
    prediction = model.predict(req)
    candidates = tuple(rec for rec in data.records if rec.class_label == prediction.predicted)
    results = tuple(rank(req, candidates, params, model.schema))
    optimal = select_optimal(results)
    comparison = None
    if optimal is not None:
        chosen = next(rec for rec in candidates if rec.id == optimal)
        comparison = compare(req, chosen, model.schema)
    return PipelineResult(
        prediction=prediction,
        class_member_count=len(candidates),
        results=results,
        optimal=optimal,
        comparison=comparison,
    )
