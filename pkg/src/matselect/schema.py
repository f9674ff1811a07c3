"""Schema for a materials database.

A schema declares the categorical attributes (each with a fixed ordinal
vocabulary), the numeric attributes (each with a unit), and the class labels.
It is loaded from a small JSON config; the bundled default
(``matselect/data/schema.json``) describes the demo corpus: eleven
processing/property attributes on the ordinal scale
NIL < Poor < Fair < Good < Very Good < Excellent, three material classes
(P = polymer, C = ceramic, M = metal), and six numeric properties. The
numeric property set is a representative selection assembled for the demo
corpus, not a published standard.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from importlib import resources

from .errors import BadLevelError, UnknownAttributeError, UnknownClassError

DEFAULT_LEVELS = ("NIL", "Poor", "Fair", "Good", "Very Good", "Excellent")

SCHEMA_FORMAT = "matselect-schema"
SCHEMA_VERSION = 1


@dataclass(frozen=True)
class CategoricalAttr:
    name: str
    levels: tuple[str, ...]


@dataclass(frozen=True)
class NumericAttr:
    name: str
    unit: str

    @property
    def column(self) -> str:
        """CSV column name: ``<name>_<unit>``."""
        return f"{self.name}_{self.unit}"


@dataclass(frozen=True)
class Schema:
    categorical: tuple[CategoricalAttr, ...]
    numeric: tuple[NumericAttr, ...]
    class_labels: tuple[str, ...]

    def __post_init__(self):
        names = [a.name for a in self.categorical] + [a.name for a in self.numeric]
        if len(set(names)) != len(names):
            raise ValueError("attribute names must be unique across categorical and numeric lists")
        for attr in self.categorical:
            if not attr.levels:
                raise ValueError(f"attribute {attr.name!r} has an empty vocabulary")
            folded = {level.casefold() for level in attr.levels}
            if len(folded) != len(attr.levels):
                raise ValueError(f"attribute {attr.name!r} has case-colliding levels")
        if not self.class_labels:
            raise ValueError("schema needs at least one class label")
        if len(set(self.class_labels)) != len(self.class_labels):
            raise ValueError("class labels must be unique")

    # -- lookups ---------------------------------------------------------

    def categorical_attr(self, name: str) -> CategoricalAttr:
        for attr in self.categorical:
            if attr.name == name:
                return attr
        raise UnknownAttributeError(name)

    def numeric_attr(self, name: str) -> NumericAttr:
        for attr in self.numeric:
            if attr.name == name:
                return attr
        raise UnknownAttributeError(name)

    def canonical_level(self, attr_name: str, value: str) -> str:
        """Resolve ``value`` against the attribute's vocabulary, ignoring case."""
        attr = self.categorical_attr(attr_name)
        wanted = value.strip().casefold()
        for level in attr.levels:
            if level.casefold() == wanted:
                return level
        raise BadLevelError(attr_name, value)

    def check_class_label(self, label: str) -> str:
        if label not in self.class_labels:
            raise UnknownClassError(label)
        return label

    # -- serialization ---------------------------------------------------

    def to_document(self) -> dict:
        return {
            "format": SCHEMA_FORMAT,
            "version": SCHEMA_VERSION,
            "class_labels": list(self.class_labels),
            "categorical": [{"name": a.name, "levels": list(a.levels)} for a in self.categorical],
            "numeric": [{"name": a.name, "unit": a.unit} for a in self.numeric],
        }

    @classmethod
    def from_document(cls, doc: dict) -> "Schema":
        if not isinstance(doc, dict):
            raise ValueError("schema document must be a JSON object")
        if doc.get("format") != SCHEMA_FORMAT:
            raise ValueError(f"not a schema document (format={doc.get('format')!r})")
        if doc.get("version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema version {doc.get('version')!r}")
        categorical = tuple(
            CategoricalAttr(entry["name"], tuple(entry["levels"])) for entry in doc.get("categorical", [])
        )
        numeric = tuple(NumericAttr(entry["name"], entry["unit"]) for entry in doc.get("numeric", []))
        return cls(categorical=categorical, numeric=numeric, class_labels=tuple(doc["class_labels"]))

    def fingerprint(self) -> str:
        blob = json.dumps(self.to_document(), sort_keys=True, separators=(",", ":"))
        return "sha256:" + hashlib.sha256(blob.encode("utf-8")).hexdigest()


def loads_schema(text: str) -> Schema:
    return Schema.from_document(json.loads(text))


def load_schema(path) -> Schema:
    with open(path, encoding="utf-8") as fh:
        return Schema.from_document(json.load(fh))


def default_schema() -> Schema:
    """The bundled demo schema."""
    text = resources.files("matselect").joinpath("data/schema.json").read_text("utf-8")
    return loads_schema(text)
