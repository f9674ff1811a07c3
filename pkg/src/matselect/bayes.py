"""Naive Bayes classifier over the categorical attributes.

Counts are tabulated once at training time; probabilities are derived on
demand so the smoothing pseudo-count can be re-applied when a model is
loaded from disk. All scoring happens in log space: with ``alpha=0`` a
zero-frequency factor legitimately drives a class score to ``-inf``, which
reproduces the unsmoothed product-of-frequencies classifier exactly.

Smoothing (pseudo-count ``alpha``, default 1) applies to both the
per-attribute likelihood tables and the class prior used in scoring:

    likelihood = (count(class, attr, level) + alpha) / (count(class) + alpha * V)
    prior      = (count(class) + alpha) / (total + alpha * m)

with V the attribute's vocabulary size and m the number of classes. At
``alpha=0`` both reduce to the plain relative-frequency estimates.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Mapping

from .errors import EmptyDatasetError, UnlabeledRecordError
from .records import Dataset, DesignRequirement, validate_requirement
from .schema import Schema

MODEL_FORMAT = "matselect-model"
MODEL_VERSION = 1


def _log(p: float) -> float:
    return math.log(p) if p > 0.0 else float("-inf")


@dataclass(frozen=True)
class ClassPrediction:
    predicted: str
    log_scores: Mapping[str, float]
    posteriors: Mapping[str, float]


@dataclass(frozen=True)
class TrainedModel:
    schema: Schema
    alpha: float
    class_counts: Mapping[str, int]
    total_count: int
    cond_counts: Mapping[str, Mapping[str, Mapping[str, int]]]
    trained_on: str

    # -- probability estimates -------------------------------------------

    def prior(self, class_label: str) -> float:
        """Unsmoothed class share of the training records."""
        self.schema.check_class_label(class_label)
        return self.class_counts[class_label] / self.total_count

    def smoothed_prior(self, class_label: str) -> float:
        self.schema.check_class_label(class_label)
        m = len(self.schema.class_labels)
        return (self.class_counts[class_label] + self.alpha) / (self.total_count + self.alpha * m)

    def likelihood(self, class_label: str, attr: str, level: str) -> float:
        self.schema.check_class_label(class_label)
        vocab = self.schema.categorical_attr(attr).levels
        level = self.schema.canonical_level(attr, level)
        count = self.cond_counts[class_label][attr][level]
        denom = self.class_counts[class_label] + self.alpha * len(vocab)
        if denom == 0:
            # no records for the class and alpha=0: alpha->0 limit is uniform
            return 1.0 / len(vocab)
        return (count + self.alpha) / denom

    # -- classification ---------------------------------------------------

    def score(self, req: DesignRequirement) -> dict[str, float]:
        """Log of (smoothed prior x product of likelihoods) per class.

        Only attributes present in the requirement enter the product; absent
        attributes are marginalized out.
        """
        req = validate_requirement(req, self.schema, require_categorical=True)
        scores: dict[str, float] = {}
        for label in self.schema.class_labels:
            total = _log(self.smoothed_prior(label))
            for attr in self.schema.categorical:
                if attr.name in req.categorical:
                    total += _log(self.likelihood(label, attr.name, req.categorical[attr.name]))
            scores[label] = total
        return scores

    def predict(self, req: DesignRequirement) -> ClassPrediction:
        """Maximum-a-posteriori class plus normalized posteriors.

        Ties break toward the larger prior, then toward schema class order.
        When every class scores -inf (the requirement is impossible under an
        unsmoothed model) posteriors fall back to the smoothed priors.
        """
        log_scores = self.score(req)
        labels = self.schema.class_labels
        predicted = max(labels, key=lambda c: (log_scores[c], self.class_counts[c]))
        best = max(log_scores.values())
        if math.isinf(best) and best < 0:
            posteriors = {c: self.smoothed_prior(c) for c in labels}
        else:
            weights = {c: math.exp(log_scores[c] - best) for c in labels}
            z = sum(weights.values())
            posteriors = {c: weights[c] / z for c in labels}
        return ClassPrediction(predicted=predicted, log_scores=log_scores, posteriors=posteriors)


def train(data: Dataset, alpha: float = 1.0) -> TrainedModel:
    """Tabulate class and per-attribute level counts from a labeled dataset.

    Records missing some categorical cells are allowed; only present cells
    are counted. With complete rows the per-(class, attr) counts sum to the
    class count, which makes every likelihood table normalize to 1.
    """
    if not (isinstance(alpha, (int, float)) and math.isfinite(alpha) and alpha >= 0):
        raise ValueError("alpha must be a finite nonnegative number")
    if not data.records:
        raise EmptyDatasetError()
    for rec in data.records:
        if rec.class_label is None:
            raise UnlabeledRecordError(rec.id)

    schema = data.schema
    class_counts = {label: 0 for label in schema.class_labels}
    cond_counts = {
        label: {attr.name: {level: 0 for level in attr.levels} for attr in schema.categorical}
        for label in schema.class_labels
    }
    for rec in data.records:
        class_counts[rec.class_label] += 1
        table = cond_counts[rec.class_label]
        for attr in schema.categorical:
            value = rec.categorical.get(attr.name)
            if value is not None:
                table[attr.name][value] += 1

    return TrainedModel(
        schema=schema,
        alpha=float(alpha),
        class_counts=class_counts,
        total_count=len(data.records),
        cond_counts=cond_counts,
        trained_on=data.fingerprint(),
    )


# -- persistence: a versioned key/value document holding raw counts --------


def model_to_document(model: TrainedModel) -> dict:
    return {
        "format": MODEL_FORMAT,
        "version": MODEL_VERSION,
        "alpha": model.alpha,
        "total_count": model.total_count,
        "trained_on": model.trained_on,
        "schema_fingerprint": model.schema.fingerprint(),
        "schema": model.schema.to_document(),
        "class_counts": dict(model.class_counts),
        "cond_counts": {
            label: {attr: dict(levels) for attr, levels in table.items()}
            for label, table in model.cond_counts.items()
        },
    }


def model_from_document(doc: dict, alpha: float | None = None) -> TrainedModel:
    """Rebuild a model from its count document.

    ``alpha`` overrides the stored smoothing pseudo-count; counts are stored
    raw precisely so this is possible.
    """
    if not isinstance(doc, dict) or doc.get("format") != MODEL_FORMAT:
        raise ValueError("not a model document")
    if doc.get("version") != MODEL_VERSION:
        raise ValueError(f"unsupported model version {doc.get('version')!r}")
    schema = Schema.from_document(doc["schema"])
    if doc.get("schema_fingerprint") not in (None, schema.fingerprint()):
        raise ValueError("model schema fingerprint does not match the embedded schema")
    effective_alpha = float(doc["alpha"]) if alpha is None else float(alpha)
    if not (math.isfinite(effective_alpha) and effective_alpha >= 0):
        raise ValueError("alpha must be a finite nonnegative number")
    class_counts = {label: int(doc["class_counts"][label]) for label in schema.class_labels}
    cond_counts = {
        label: {
            attr.name: {level: int(doc["cond_counts"][label][attr.name][level]) for level in attr.levels}
            for attr in schema.categorical
        }
        for label in schema.class_labels
    }
    total = int(doc["total_count"])
    if sum(class_counts.values()) != total:
        raise ValueError("class counts do not sum to the total count")
    return TrainedModel(
        schema=schema,
        alpha=effective_alpha,
        class_counts=class_counts,
        total_count=total,
        cond_counts=cond_counts,
        trained_on=str(doc.get("trained_on", "")),
    )


def save_model(model: TrainedModel, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(model_to_document(model), fh, indent=2)
        fh.write("\n")


def load_model(path, alpha: float | None = None) -> TrainedModel:
    with open(path, encoding="utf-8") as fh:
        return model_from_document(json.load(fh), alpha=alpha)
