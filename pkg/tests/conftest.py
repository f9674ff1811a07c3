from __future__ import annotations

import json
from pathlib import Path

import pytest

import matselect as ms

DATA_DIR = Path(ms.__file__).parent / "data"
GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def schema() -> ms.Schema:
    return ms.default_schema()


@pytest.fixture(scope="session")
def corpus(schema) -> ms.Dataset:
    return ms.load_materials_csv(DATA_DIR / "materials.csv", schema)


@pytest.fixture(scope="session")
def corpus_csv_text() -> str:
    return (DATA_DIR / "materials.csv").read_text("utf-8")


@pytest.fixture(scope="session")
def demo_requirement() -> ms.DesignRequirement:
    doc = json.loads((DATA_DIR / "requirement_example.json").read_text("utf-8"))
    return ms.requirement_from_document(doc)


@pytest.fixture(scope="session")
def model(corpus) -> ms.TrainedModel:
    return ms.train(corpus, alpha=1.0)


@pytest.fixture(scope="session")
def model_alpha0(corpus) -> ms.TrainedModel:
    return ms.train(corpus, alpha=0.0)


@pytest.fixture(scope="session")
def golden_pipeline_bytes() -> bytes:
    return (GOLDEN_DIR / "pipeline_result.json").read_bytes()
