"""Command-line front door: train, classify, select, pipeline, serve.

Exit codes: 0 success, 1 domain error (bad input, no prediction), 2 usage
error. JSON results go to stdout as a single document; diagnostics go to
stderr. The schema path may also be supplied via the MATSELECT_SCHEMA
environment variable; the bundled demo schema is the fallback.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from importlib import resources

from .bayes import load_model, save_model, train
from .csvio import load_materials_csv
from .errors import MatSelectError
from .pipeline import discover
from .records import requirement_from_document, validate_requirement
from .schema import Schema, load_schema
from .serialize import pipeline_document, prediction_document, results_document, to_json
from .similarity import SelectionParams, rank, select_optimal

SCHEMA_ENV_VAR = "MATSELECT_SCHEMA"


def _resolve_schema(path: str | None) -> Schema:
    path = path or os.environ.get(SCHEMA_ENV_VAR)
    if path:
        return load_schema(path)
    text = resources.files("matselect").joinpath("data/schema.json").read_text("utf-8")
    return Schema.from_document(json.loads(text))


def _load_requirement(path: str):
    with open(path, encoding="utf-8") as fh:
        return requirement_from_document(json.load(fh))


def _selection_params(args) -> SelectionParams:
    return SelectionParams(
        threshold=args.threshold,
        min_overlap=args.min_overlap,
        top_k=args.top_k,
        normalize=args.normalize,
    )


def _add_selection_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--threshold", type=float, default=0.997,
                        help="similarity threshold in [-1, 1] (default 0.997)")
    parser.add_argument("--min-overlap", type=int, default=3,
                        help="minimum shared numeric attributes (default 3)")
    parser.add_argument("--top-k", type=int, default=None, help="keep only the k best ranked materials")
    parser.add_argument("--normalize", action="store_true",
                        help="z-score attributes over the candidate set before correlating")


def _add_output_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--output", choices=("table", "json"), default="json",
                        help="output format (default json)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matselect",
        description="Classify design requirements into a material class and pick the best-matching material.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_train = sub.add_parser("train", help="train a classifier from a materials CSV")
    p_train.add_argument("--data", required=True, help="materials CSV path")
    p_train.add_argument("--schema", help="schema JSON path")
    p_train.add_argument("--alpha", type=float, default=1.0,
                         help="smoothing pseudo-count (default 1; 0 disables smoothing)")
    p_train.add_argument("--out", required=True, help="where to write the model document")

    p_classify = sub.add_parser("classify", help="predict the material class of a requirement")
    p_classify.add_argument("--model", required=True, help="trained model path")
    p_classify.add_argument("--req", required=True, help="requirement JSON path")
    p_classify.add_argument("--alpha", type=float, default=None,
                            help="re-apply a different smoothing pseudo-count")
    _add_output_flag(p_classify)

    p_select = sub.add_parser("select", help="rank all materials in a CSV against a requirement")
    p_select.add_argument("--data", required=True, help="materials CSV path")
    p_select.add_argument("--schema", help="schema JSON path")
    p_select.add_argument("--req", required=True, help="requirement JSON path")
    _add_selection_flags(p_select)
    _add_output_flag(p_select)

    p_pipe = sub.add_parser("pipeline", help="classify, filter to the class, rank, and pick the optimum")
    p_pipe.add_argument("--model", required=True, help="trained model path")
    p_pipe.add_argument("--data", required=True, help="materials CSV path")
    p_pipe.add_argument("--schema", help="schema JSON path (defaults to the model's schema)")
    p_pipe.add_argument("--req", required=True, help="requirement JSON path")
    p_pipe.add_argument("--alpha", type=float, default=None,
                        help="re-apply a different smoothing pseudo-count")
    _add_selection_flags(p_pipe)
    _add_output_flag(p_pipe)

    p_serve = sub.add_parser("serve", help="serve the HTTP API (and optionally the web UI)")
    p_serve.add_argument("--model", required=True, help="trained model path")
    p_serve.add_argument("--data", required=True, help="materials CSV path")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--static", help="directory of built web UI assets to serve at /")

    return parser


# -- table rendering --------------------------------------------------------


def _print_table(rows: list[list[str]], header: list[str]) -> None:
    widths = [max(len(str(cell)) for cell in col) for col in zip(header, *rows)] if rows else [len(h) for h in header]
    line = "  ".join(str(h).ljust(w) for h, w in zip(header, widths))
    print(line.rstrip())
    for row in rows:
        print("  ".join(str(c).ljust(w) for c, w in zip(row, widths)).rstrip())


def _fmt_r(r: float | None) -> str:
    return "" if r is None else f"{r:.6f}"


def _prediction_table(pred) -> None:
    print(f"predicted: {pred.predicted}")
    rows = [
        [label, f"{pred.posteriors[label]:.6f}", _fmt_r(None) if pred.log_scores[label] == float("-inf") else f"{pred.log_scores[label]:.6f}"]
        for label in pred.posteriors
    ]
    _print_table(rows, ["class", "posterior", "log_score"])


def _results_table(results, names: dict[str, str] | None = None) -> None:
    rows = [
        [
            "" if res.rank is None else str(res.rank),
            res.material_id,
            (names or {}).get(res.material_id, ""),
            _fmt_r(res.r),
            res.status.value,
        ]
        for res in results
    ]
    _print_table(rows, ["rank", "id", "name", "r", "status"])


# -- subcommands --------------------------------------------------------------


def _cmd_train(args) -> int:
    schema = _resolve_schema(args.schema)
    data = load_materials_csv(args.data, schema)
    model = train(data, alpha=args.alpha)
    save_model(model, args.out)
    print(f"trained on {model.total_count} records -> {args.out}", file=sys.stderr)
    return 0


def _cmd_classify(args) -> int:
    model = load_model(args.model, alpha=args.alpha)
    req = _load_requirement(args.req)
    pred = model.predict(req)
    if args.output == "table":
        _prediction_table(pred)
    else:
        sys.stdout.write(to_json(prediction_document(pred)))
    return 0


def _cmd_select(args) -> int:
    schema = _resolve_schema(args.schema)
    data = load_materials_csv(args.data, schema)
    req = validate_requirement(_load_requirement(args.req), schema)
    params = _selection_params(args)
    results = rank(req, data.records, params, schema)
    if args.output == "table":
        _results_table(results, {rec.id: rec.name for rec in data.records})
        optimal = select_optimal(results)
        print(f"optimal: {optimal if optimal is not None else '(none)'}")
    else:
        doc = {"results": results_document(results), "optimal": select_optimal(results)}
        sys.stdout.write(to_json(doc))
    return 0


def _cmd_pipeline(args) -> int:
    model = load_model(args.model, alpha=args.alpha)
    schema = _resolve_schema(args.schema) if args.schema else model.schema
    data = load_materials_csv(args.data, schema)
    req = _load_requirement(args.req)
    result = discover(model, data, req, _selection_params(args))
    if args.output == "table":
        _prediction_table(result.prediction)
        print(f"candidates in class {result.prediction.predicted}: {result.class_member_count}")
        _results_table(result.results, {rec.id: rec.name for rec in data.records})
        print(f"optimal: {result.optimal if result.optimal is not None else '(none)'}")
        if result.comparison:
            _print_table(
                [[row.attribute, row.unit, repr(row.requirement), repr(row.material)] for row in result.comparison],
                ["attribute", "unit", "requirement", "optimal"],
            )
    else:
        sys.stdout.write(to_json(pipeline_document(result)))
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import build_state, create_app

    state = build_state(args.model, args.data)
    app = create_app(state, static_dir=args.static)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


_COMMANDS = {
    "train": _cmd_train,
    "classify": _cmd_classify,
    "select": _cmd_select,
    "pipeline": _cmd_pipeline,
    "serve": _cmd_serve,
}


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except MatSelectError as err:
        print(str(err), file=sys.stderr)
        return 1
    except (OSError, ValueError, json.JSONDecodeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
