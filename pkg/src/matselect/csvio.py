"""Flat-file ingestion for the materials database.

Expected layout: a UTF-8 CSV with header
``id,name,class,<categorical attrs...>,<numeric columns...>`` where numeric
columns are named ``<property>_<unit>`` (e.g. ``density_g_cm3``). Empty cells
are missing values. Standard double-quote escaping applies.
"""

from __future__ import annotations

import csv
import io

from .errors import (
    BadLevelError,
    BadNumberError,
    UnknownClassError,
    UnknownColumnError,
)
from .records import Dataset, build_record, make_dataset
from .schema import Schema

_ID, _NAME, _CLASS = "id", "name", "class"


def _header_map(header: list[str], schema: Schema) -> dict[str, str]:
    """Map each column name to its role: 'id' / 'name' / 'class' /
    'cat:<attr>' / 'num:<attr>'. Unknown or duplicate columns are errors."""
    cat_names = {attr.name for attr in schema.categorical}
    num_by_column = {attr.column: attr.name for attr in schema.numeric}
    roles: dict[str, str] = {}
    for raw in header:
        column = raw.strip()
        if column in roles:
            raise UnknownColumnError(column, f"CSV column {column!r} appears more than once")
        if column in (_ID, _NAME, _CLASS):
            roles[column] = column
        elif column in cat_names:
            roles[column] = f"cat:{column}"
        elif column in num_by_column:
            roles[column] = f"num:{num_by_column[column]}"
        else:
            raise UnknownColumnError(column)
    if _ID not in roles:
        raise ValueError("CSV header lacks the required 'id' column")
    return roles


def parse_materials_csv(text: str, schema: Schema) -> Dataset:
    """Parse CSV text into a validated Dataset.

    Row numbers in errors are 1-based data-row ordinals (the header is row 0).
    """
    rows = [row for row in csv.reader(io.StringIO(text))]
    if not rows:
        raise ValueError("CSV input is empty (missing header row)")
    header = rows[0]
    roles = _header_map(header, schema)
    columns = [roles[name.strip()] for name in header]

    records = []
    rownum = 0
    for cells in rows[1:]:
        if not cells:
            continue  # blank line
        rownum += 1
        if len(cells) > len(columns):
            raise ValueError(f"row {rownum}: expected at most {len(columns)} cells, got {len(cells)}")
        rec_id = ""
        name = None
        class_label = None
        categorical: dict[str, str] = {}
        numeric: dict[str, float] = {}
        for role, cell in zip(columns, cells):
            value = cell.strip()
            if not value:
                continue
            if role == _ID:
                rec_id = value
            elif role == _NAME:
                name = value
            elif role == _CLASS:
                class_label = value
            elif role.startswith("cat:"):
                categorical[role[4:]] = value
            else:
                attr = role[4:]
                try:
                    numeric[attr] = float(value)
                except ValueError:
                    raise BadNumberError(attr, value, row=rownum) from None
        if not rec_id:
            raise ValueError(f"row {rownum}: empty id")
        try:
            records.append(
                build_record(
                    schema,
                    id=rec_id,
                    name=name,
                    class_label=class_label,
                    categorical=categorical,
                    numeric=numeric,
                )
            )
        except BadLevelError as err:
            raise BadLevelError(err.attr, err.value, row=rownum) from None
        except BadNumberError as err:
            raise BadNumberError(err.attr, err.value, row=rownum) from None
        except UnknownClassError as err:
            raise UnknownClassError(err.name, row=rownum) from None
    return make_dataset(schema, records)


def serialize_materials_csv(dataset: Dataset) -> str:
    """Canonical CSV form; parsing it back yields an identical Dataset."""
    schema = dataset.schema
    header = (
        [_ID, _NAME, _CLASS]
        + [attr.name for attr in schema.categorical]
        + [attr.column for attr in schema.numeric]
    )
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for rec in dataset.records:
        row = [rec.id, rec.name, rec.class_label or ""]
        row += [rec.categorical.get(attr.name, "") for attr in schema.categorical]
        row += [
            repr(rec.numeric[attr.name]) if attr.name in rec.numeric else ""
            for attr in schema.numeric
        ]
        writer.writerow(row)
    return buf.getvalue()


def load_materials_csv(path, schema: Schema) -> Dataset:
    with open(path, encoding="utf-8") as fh:
        return parse_materials_csv(fh.read(), schema)
