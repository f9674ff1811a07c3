from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

import matselect as ms
from matselect.errors import (
    BadNumberError,
    BadRequirementError,
    DuplicateIdError,
    EmptyCategoricalError,
    UnknownAttributeError,
)


class TestBuildRecord:
    def test_levels_canonicalized(self, schema):
        rec = ms.build_record(schema, id="x", categorical={"CR": "excellent"}, numeric={"density": 1})
        assert rec.categorical == {"CR": "Excellent"}
        assert rec.numeric == {"density": 1.0}
        assert rec.name == "x"

    def test_unknown_attribute(self, schema):
        with pytest.raises(UnknownAttributeError):
            ms.build_record(schema, id="x", categorical={"FOO": "Good"})
        with pytest.raises(UnknownAttributeError):
            ms.build_record(schema, id="x", numeric={"FOO": 1.0})

    @pytest.mark.parametrize("bad", [float("nan"), float("inf"), float("-inf"), "12", True])
    def test_non_finite_numeric_rejected(self, schema, bad):
        with pytest.raises(BadNumberError):
            ms.build_record(schema, id="x", numeric={"density": bad})

    def test_duplicate_ids_rejected(self, schema):
        rec = ms.build_record(schema, id="x")
        with pytest.raises(DuplicateIdError):
            ms.make_dataset(schema, [rec, rec])


class TestValidateRequirement:
    def test_canonicalizes(self, schema):
        req = ms.DesignRequirement(categorical={"CR": "excellent"})
        out = ms.validate_requirement(req, schema)
        assert out.categorical == {"CR": "Excellent"}

    def test_unknown_attribute(self, schema):
        req = ms.DesignRequirement(categorical={"CR": "Excellent", "FOO": "Good"})
        with pytest.raises(UnknownAttributeError) as err:
            ms.validate_requirement(req, schema)
        assert "FOO" in str(err.value)

    def test_empty_categorical_only_when_classifying(self, schema):
        req = ms.DesignRequirement(numeric={"density": 1.0})
        assert ms.validate_requirement(req, schema).numeric == {"density": 1.0}
        with pytest.raises(EmptyCategoricalError):
            ms.validate_requirement(req, schema, require_categorical=True)

    @given(
        st.dictionaries(
            st.sampled_from(["CR", "CH", "CE", "SM", "CAST"]),
            st.sampled_from([level.upper() for level in ms.DEFAULT_LEVELS]
                            + [level.lower() for level in ms.DEFAULT_LEVELS]),
            max_size=5,
        )
    )
    def test_idempotent(self, categorical):
        """Validating twice equals validating once."""
        schema = ms.default_schema()
        once = ms.validate_requirement(ms.DesignRequirement(categorical=categorical), schema)
        twice = ms.validate_requirement(once, schema)
        assert once == twice


class TestRequirementDocuments:
    def test_round_trip(self, demo_requirement):
        doc = ms.requirement_to_document(demo_requirement)
        assert ms.requirement_from_document(doc) == demo_requirement

    @pytest.mark.parametrize(
        "doc",
        [
            "not an object",
            {"categorical": []},
            {"numeric": {"density": "high"}},
            {"categorical": {"CR": 3}},
            {"numeric": {"density": True}},
        ],
    )
    def test_malformed_documents_rejected(self, doc):
        with pytest.raises(BadRequirementError):
            ms.requirement_from_document(doc)


def test_dataset_fingerprint_tracks_content(schema):
    a = ms.make_dataset(schema, [ms.build_record(schema, id="x", numeric={"density": 1.0})])
    b = ms.make_dataset(schema, [ms.build_record(schema, id="x", numeric={"density": 2.0})])
    assert a.fingerprint() != b.fingerprint()
    assert a.fingerprint() == ms.make_dataset(
        schema, [ms.build_record(schema, id="x", numeric={"density": 1.0})]
    ).fingerprint()
