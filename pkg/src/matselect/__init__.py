"""matselect: materials knowledge discovery.

Classify a set of design requirements into a material class with a Naive
Bayes classifier over ordinal categorical attributes, then pick the optimal
material inside that class by Pearson-correlation similarity over numeric
properties.
"""

from .bayes import ClassPrediction, TrainedModel, load_model, model_from_document, model_to_document, save_model, train
from .csvio import load_materials_csv, parse_materials_csv, serialize_materials_csv
from .pipeline import ComparisonRow, PipelineResult, compare, discover
from .records import (
    Dataset,
    DesignRequirement,
    MaterialRecord,
    build_record,
    make_dataset,
    requirement_from_document,
    requirement_to_document,
    validate_requirement,
)
from .schema import DEFAULT_LEVELS, CategoricalAttr, NumericAttr, Schema, default_schema, load_schema, loads_schema
from .similarity import (
    AlignedPair,
    SelectionParams,
    SelectionResult,
    SelectionStatus,
    align,
    pearson,
    rank,
    select_optimal,
)

__version__ = "0.1.0"

__all__ = [
    "AlignedPair",
    "CategoricalAttr",
    "ClassPrediction",
    "ComparisonRow",
    "Dataset",
    "DEFAULT_LEVELS",
    "DesignRequirement",
    "MaterialRecord",
    "NumericAttr",
    "PipelineResult",
    "Schema",
    "SelectionParams",
    "SelectionResult",
    "SelectionStatus",
    "TrainedModel",
    "align",
    "build_record",
    "compare",
    "default_schema",
    "discover",
    "load_materials_csv",
    "load_model",
    "load_schema",
    "loads_schema",
    "make_dataset",
    "model_from_document",
    "model_to_document",
    "parse_materials_csv",
    "pearson",
    "rank",
    "requirement_from_document",
    "requirement_to_document",
    "save_model",
    "select_optimal",
    "serialize_materials_csv",
    "train",
    "validate_requirement",
    "__version__",
]
