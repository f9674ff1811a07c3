import type { PipelineDoc, RequirementBody, SchemaDoc } from "./types.js";

// Form state keeps raw input strings; parsing happens at validation time so
// half-typed numbers never crash the UI.

export const THRESHOLD_MIN = 0.9;
export const THRESHOLD_MAX = 1.0;
export const THRESHOLD_DEFAULT = 0.997;

export const MIN_CATEGORICAL = 1;
export const MIN_NUMERIC = 3;

export interface FormState {
  categorical: Record<string, string>; // attr -> level, "" = unset
  numeric: Record<string, string>; // attr -> raw text, "" = unset
  threshold: number;
  topK: string; // "" = no limit
}

export function emptyForm(schema: SchemaDoc): FormState {
  const categorical: Record<string, string> = {};
  for (const attr of schema.categorical) categorical[attr.name] = "";
  const numeric: Record<string, string> = {};
  for (const attr of schema.numeric) numeric[attr.name] = "";
  return { categorical, numeric, threshold: THRESHOLD_DEFAULT, topK: "" };
}

export interface Validity {
  ok: boolean;
  categoricalCount: number;
  numericCount: number;
  problems: string[];
}

export function validate(form: FormState): Validity {
  const problems: string[] = [];
  const categoricalCount = Object.values(form.categorical).filter((v) => v !== "").length;
  let numericCount = 0;
  for (const [attr, raw] of Object.entries(form.numeric)) {
    if (raw.trim() === "") continue;
    const value = Number(raw);
    if (Number.isFinite(value)) {
      numericCount += 1;
    } else {
      problems.push(`${attr}: not a number`);
    }
  }
  if (categoricalCount < MIN_CATEGORICAL) {
    problems.push(`pick at least ${MIN_CATEGORICAL} quality level`);
  }
  if (numericCount < MIN_NUMERIC) {
    problems.push(`enter at least ${MIN_NUMERIC} numeric targets`);
  }
  if (form.threshold < THRESHOLD_MIN || form.threshold > THRESHOLD_MAX) {
    problems.push(`threshold must stay within [${THRESHOLD_MIN}, ${THRESHOLD_MAX}]`);
  }
  if (form.topK.trim() !== "" && !(Number.isInteger(Number(form.topK)) && Number(form.topK) > 0)) {
    problems.push("top-k must be a positive integer");
  }
  return { ok: problems.length === 0, categoricalCount, numericCount, problems };
}

export function toRequirementBody(form: FormState): RequirementBody {
  const categorical: Record<string, string> = {};
  for (const [attr, level] of Object.entries(form.categorical)) {
    if (level !== "") categorical[attr] = level;
  }
  const numeric: Record<string, number> = {};
  for (const [attr, raw] of Object.entries(form.numeric)) {
    if (raw.trim() !== "") numeric[attr] = Number(raw);
  }
  const body: RequirementBody = { categorical, numeric, params: { threshold: form.threshold } };
  if (form.topK.trim() !== "") {
    body.params = { ...body.params, top_k: Number(form.topK) };
  }
  return body;
}

/** Later submissions supersede earlier ones; stale responses are dropped. */
export class RequestSequencer {
  private seq = 0;

  next(): number {
    this.seq += 1;
    return this.seq;
  }

  isCurrent(ticket: number): boolean {
    return ticket === this.seq;
  }
}

export interface AppState {
  result: PipelineDoc | null;
  previousOptimal: string | null;
  error: string | null;
}

export function initialAppState(): AppState {
  return { result: null, previousOptimal: null, error: null };
}

/** A fresh result replaces the old one; the displaced optimal becomes the
 * "previous pick" so a what-if edit can be compared against it. */
export function applyResult(state: AppState, doc: PipelineDoc): AppState {
  return {
    result: doc,
    previousOptimal: state.result ? state.result.optimal : null,
    error: null,
  };
}

export function applyError(state: AppState, message: string): AppState {
  return { ...state, error: message };
}

/** Ids of ranked materials, in served order. */
export function rankedIds(doc: PipelineDoc): string[] {
  return doc.results.filter((res) => res.status === "Ranked").map((res) => res.material_id);
}
