"""HTTP/JSON service over an immutable model + dataset pair.

Routes:
    POST /api/classify   requirement document -> prediction document
    POST /api/pipeline   requirement (+ optional params) -> pipeline document
    GET  /api/materials  material summaries, optionally filtered by class
    GET  /api/schema     the service's schema document (drives the UI form)
    GET  /api/health     status, record count, class labels

Everything is loaded once at startup and never mutated, so handlers are pure
and the service needs no locking. Error bodies are {"error": code,
"detail": message}; an undefined correlation serializes as null r plus an
explanatory status string. Training happens offline via the CLI.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .bayes import TrainedModel, load_model
from .csvio import load_materials_csv
from .errors import EmptyCategoricalError, MatSelectError, UnknownClassError
from .pipeline import discover
from .records import Dataset, requirement_from_document
from .serialize import pipeline_document, prediction_document, to_json
from .similarity import SelectionParams


@dataclass(frozen=True)
class ServiceState:
    model: TrainedModel
    data: Dataset
    default_params: SelectionParams = SelectionParams()


def build_state(model_path, data_path, default_params: SelectionParams = SelectionParams()) -> ServiceState:
    model = load_model(model_path)
    data = load_materials_csv(data_path, model.schema)
    return ServiceState(model=model, data=data, default_params=default_params)


def _error(status: int, code: str, detail: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": code, "detail": detail})


def _domain_error(err: MatSelectError) -> JSONResponse:
    status = 422 if isinstance(err, EmptyCategoricalError) else 400
    return _error(status, err.code, err.detail)


def _params_from_body(body: dict, defaults: SelectionParams) -> SelectionParams:
    """Optional per-request overrides: threshold, min_overlap, top_k, normalize."""
    def pick(key, fallback):
        return body.get(key, fallback)

    try:
        return SelectionParams(
            threshold=float(pick("threshold", defaults.threshold)),
            min_overlap=int(pick("min_overlap", defaults.min_overlap)),
            top_k=(None if pick("top_k", defaults.top_k) is None else int(pick("top_k", defaults.top_k))),
            normalize=bool(pick("normalize", defaults.normalize)),
        )
    except (TypeError, ValueError) as exc:
        raise ValueError(f"bad selection params: {exc}") from None


def create_app(state: ServiceState, static_dir=None) -> FastAPI:
    app = FastAPI(title="matselect", docs_url=None, redoc_url=None)

    async def read_json_body(request: Request):
        raw = await request.body()
        try:
            return json.loads(raw) if raw else {}
        except json.JSONDecodeError:
            return None

    @app.post("/api/classify")
    async def classify(request: Request):
        body = await read_json_body(request)
        if body is None:
            return _error(400, "BadRequirement", "request body is not valid JSON")
        try:
            req = requirement_from_document(body)
            pred = state.model.predict(req)
        except MatSelectError as err:
            return _domain_error(err)
        return Response(content=to_json(prediction_document(pred)), media_type="application/json")

    @app.post("/api/pipeline")
    async def pipeline(request: Request):
        body = await read_json_body(request)
        if body is None:
            return _error(400, "BadRequirement", "request body is not valid JSON")
        if not isinstance(body, dict):
            return _error(400, "BadRequirement", "request body must be a JSON object")
        raw_params = body.get("params") or {}
        if not isinstance(raw_params, dict):
            return _error(400, "BadRequirement", "'params' must be an object")
        try:
            params = _params_from_body(raw_params, state.default_params)
        except ValueError as exc:
            return _error(400, "BadRequirement", str(exc))
        try:
            req = requirement_from_document({k: v for k, v in body.items() if k != "params"})
            result = discover(state.model, state.data, req, params)
        except MatSelectError as err:
            return _domain_error(err)
        return Response(content=to_json(pipeline_document(result)), media_type="application/json")

    @app.get("/api/materials")
    async def materials(request: Request):
        class_filter = request.query_params.get("class")
        if class_filter is not None:
            try:
                state.model.schema.check_class_label(class_filter)
            except UnknownClassError as err:
                return _domain_error(err)
        items = [
            {
                "id": rec.id,
                "name": rec.name,
                "class": rec.class_label,
                "numeric_attrs": [a.name for a in state.model.schema.numeric if a.name in rec.numeric],
            }
            for rec in state.data.records
            if class_filter is None or rec.class_label == class_filter
        ]
        return JSONResponse(content=items)

    @app.get("/api/schema")
    async def schema():
        return JSONResponse(content=state.model.schema.to_document())

    @app.get("/api/health")
    async def health():
        return JSONResponse(
            content={
                "status": "ok",
                "records": len(state.data.records),
                "classes": list(state.model.schema.class_labels),
            }
        )

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
