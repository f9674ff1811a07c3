"""Domain errors shared across the package.

Every error carries a stable machine-readable ``code`` (surfaced verbatim by
the CLI and the HTTP service) plus a human-readable detail message.
"""

from __future__ import annotations


class MatSelectError(Exception):
    """Base class for all domain errors."""

    code = "Error"

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail

    def __str__(self) -> str:
        return f"{self.code}: {self.detail}"


class UnknownColumnError(MatSelectError):
    code = "UnknownColumn"

    def __init__(self, name: str, detail: str | None = None):
        super().__init__(detail or f"CSV column {name!r} does not map to the schema")
        self.name = name


class BadLevelError(MatSelectError):
    code = "BadLevel"

    def __init__(self, attr: str, value: str, row: int | None = None):
        where = f" (row {row})" if row is not None else ""
        super().__init__(f"{value!r} is not a level of attribute {attr!r}{where}")
        self.attr = attr
        self.value = value
        self.row = row


class BadNumberError(MatSelectError):
    code = "BadNumber"

    def __init__(self, attr: str, value: object, row: int | None = None):
        where = f" (row {row})" if row is not None else ""
        super().__init__(f"{value!r} is not a finite number for attribute {attr!r}{where}")
        self.attr = attr
        self.value = value
        self.row = row


class DuplicateIdError(MatSelectError):
    code = "DuplicateId"

    def __init__(self, record_id: str):
        super().__init__(f"record id {record_id!r} occurs more than once")
        self.record_id = record_id


class UnknownAttributeError(MatSelectError):
    code = "UnknownAttribute"

    def __init__(self, name: str):
        super().__init__(f"attribute {name!r} is not declared in the schema")
        self.name = name


class UnknownClassError(MatSelectError):
    code = "UnknownClass"

    def __init__(self, name: str, row: int | None = None):
        where = f" (row {row})" if row is not None else ""
        super().__init__(f"{name!r} is not a declared class label{where}")
        self.name = name
        self.row = row


class EmptyCategoricalError(MatSelectError):
    code = "EmptyCategorical"

    def __init__(self):
        super().__init__("classification needs at least one categorical entry")


class UnlabeledRecordError(MatSelectError):
    code = "UnlabeledRecord"

    def __init__(self, record_id: str):
        super().__init__(f"record {record_id!r} has no class label")
        self.record_id = record_id


class EmptyDatasetError(MatSelectError):
    code = "EmptyDataset"

    def __init__(self):
        super().__init__("cannot train on a dataset with no records")


class LengthMismatchError(MatSelectError):
    code = "LengthMismatch"

    def __init__(self, nx: int, ny: int):
        super().__init__(f"vectors differ in length ({nx} vs {ny})")


class TooShortError(MatSelectError):
    code = "TooShort"

    def __init__(self, n: int):
        super().__init__(f"correlation needs at least 2 values, got {n}")


class NonFiniteError(MatSelectError):
    code = "NonFinite"

    def __init__(self):
        super().__init__("vectors must contain only finite values")


class TooFewQueryAttrsError(MatSelectError):
    code = "TooFewQueryAttrs"

    def __init__(self, have: int, need: int):
        super().__init__(f"requirement has {have} numeric entries, selection needs at least {need}")
        self.have = have
        self.need = need


class SchemaMismatchError(MatSelectError):
    code = "SchemaMismatch"

    def __init__(self):
        super().__init__("model and dataset were built against different schemas")


class BadRequirementError(MatSelectError):
    code = "BadRequirement"
