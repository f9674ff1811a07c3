"""Domain records: materials, datasets, and design requirements.

All types are immutable after construction and safe to share between
threads. Missing property values are genuinely absent map entries, never
sentinel strings; the similarity stage relies on that to align
pairwise-complete vectors. "NIL" is an ordinary vocabulary level, not a
missing-value marker.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass, field
from typing import Mapping

from .errors import (
    BadNumberError,
    BadRequirementError,
    DuplicateIdError,
    EmptyCategoricalError,
    UnknownAttributeError,
)
from .schema import Schema


@dataclass(frozen=True)
class MaterialRecord:
    id: str
    name: str
    class_label: str | None
    categorical: Mapping[str, str]
    numeric: Mapping[str, float]


@dataclass(frozen=True)
class Dataset:
    schema: Schema
    records: tuple[MaterialRecord, ...]

    def fingerprint(self) -> str:
        """Stable digest of schema plus record contents, order included."""
        payload = [
            self.schema.fingerprint(),
            [
                [rec.id, rec.name, rec.class_label, dict(rec.categorical), dict(rec.numeric)]
                for rec in self.records
            ],
        ]
        blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
        return "sha256:" + hashlib.sha256(blob.encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class DesignRequirement:
    categorical: Mapping[str, str] = field(default_factory=dict)
    numeric: Mapping[str, float] = field(default_factory=dict)


def _canonical_categorical(raw: Mapping[str, str], schema: Schema) -> dict[str, str]:
    known = {attr.name for attr in schema.categorical}
    for name in raw:
        if name not in known:
            raise UnknownAttributeError(name)
    # schema order keeps downstream iteration deterministic
    return {
        attr.name: schema.canonical_level(attr.name, raw[attr.name])
        for attr in schema.categorical
        if attr.name in raw
    }


def _canonical_numeric(raw: Mapping[str, float], schema: Schema) -> dict[str, float]:
    known = {attr.name for attr in schema.numeric}
    for name in raw:
        if name not in known:
            raise UnknownAttributeError(name)
    out: dict[str, float] = {}
    for attr in schema.numeric:
        if attr.name not in raw:
            continue
        value = raw[attr.name]
        if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
            raise BadNumberError(attr.name, value)
        out[attr.name] = float(value)
    return out


def build_record(
    schema: Schema,
    *,
    id: str,
    name: str | None = None,
    class_label: str | None = None,
    categorical: Mapping[str, str] | None = None,
    numeric: Mapping[str, float] | None = None,
) -> MaterialRecord:
    """Construct a validated record: levels canonicalized, numbers finite."""
    if not id:
        raise ValueError("record id must be non-empty")
    if class_label is not None:
        schema.check_class_label(class_label)
    return MaterialRecord(
        id=id,
        name=name if name is not None else id,
        class_label=class_label,
        categorical=_canonical_categorical(categorical or {}, schema),
        numeric=_canonical_numeric(numeric or {}, schema),
    )


def make_dataset(schema: Schema, records) -> Dataset:
    records = tuple(records)
    seen: set[str] = set()
    for rec in records:
        if rec.id in seen:
            raise DuplicateIdError(rec.id)
        seen.add(rec.id)
    return Dataset(schema=schema, records=records)


def validate_requirement(
    req: DesignRequirement,
    schema: Schema,
    *,
    require_categorical: bool = False,
) -> DesignRequirement:
    """Canonicalize a requirement against the schema.

    Level matching is case-insensitive; the returned requirement stores the
    canonical spelling. Validating twice equals validating once.
    """
    categorical = _canonical_categorical(req.categorical, schema)
    numeric = _canonical_numeric(req.numeric, schema)
    if require_categorical and not categorical:
        raise EmptyCategoricalError()
    return DesignRequirement(categorical=categorical, numeric=numeric)


def requirement_from_document(doc: object) -> DesignRequirement:
    """Parse the JSON wire/file form: {"categorical": {...}, "numeric": {...}}."""
    if not isinstance(doc, dict):
        raise BadRequirementError("requirement must be a JSON object")
    categorical = doc.get("categorical", {})
    numeric = doc.get("numeric", {})
    if not isinstance(categorical, dict) or not isinstance(numeric, dict):
        raise BadRequirementError("'categorical' and 'numeric' must be objects")
    for key, value in categorical.items():
        if not isinstance(key, str) or not isinstance(value, str):
            raise BadRequirementError("categorical entries must map attribute names to level strings")
    for key, value in numeric.items():
        if not isinstance(key, str) or isinstance(value, bool) or not isinstance(value, (int, float)):
            raise BadRequirementError("numeric entries must map attribute names to numbers")
    return DesignRequirement(
        categorical=dict(categorical),
        numeric={key: float(value) for key, value in numeric.items()},
    )


def requirement_to_document(req: DesignRequirement) -> dict:
    return {"categorical": dict(req.categorical), "numeric": dict(req.numeric)}
