import { ApiError, Client } from "./api.js";
import {
  applyError,
  applyResult,
  emptyForm,
  initialAppState,
  RequestSequencer,
  THRESHOLD_DEFAULT,
  THRESHOLD_MAX,
  THRESHOLD_MIN,
  toRequirementBody,
  validate,
  type AppState,
  type FormState,
} from "./state.js";
import { escapeHtml, renderErrorBanner, renderResults } from "./render.js";
import type { SchemaDoc } from "./types.js";

const client = new Client("");
const sequencer = new RequestSequencer();

let schema: SchemaDoc;
let names: Record<string, string> = {};
let form: FormState;
let app: AppState = initialAppState();
let lastThreshold = THRESHOLD_DEFAULT;

function el<T extends HTMLElement>(selector: string): T {
  const node = document.querySelector(selector);
  if (!node) throw new Error(`missing element ${selector}`);
  return node as T;
}

function buildForm(): void {
  const catHost = el<HTMLDivElement>("#categorical-fields");
  catHost.innerHTML = schema.categorical
    .map((attr) => {
      const options = [`<option value="">(unset)</option>`]
        .concat(attr.levels.map((level) => `<option value="${escapeHtml(level)}">${escapeHtml(level)}</option>`))
        .join("");
      return (
        `<label class="field" data-attr="${escapeHtml(attr.name)}">` +
        `<span>${escapeHtml(attr.name)}</span>` +
        `<select name="cat-${escapeHtml(attr.name)}">${options}</select>` +
        `<span class="field-error" hidden></span>` +
        `</label>`
      );
    })
    .join("");

  const numHost = el<HTMLDivElement>("#numeric-fields");
  numHost.innerHTML = schema.numeric
    .map(
      (attr) =>
        `<label class="field" data-attr="${escapeHtml(attr.name)}">` +
        `<span>${escapeHtml(attr.name)} <em>(${escapeHtml(attr.unit)})</em></span>` +
        `<input name="num-${escapeHtml(attr.name)}" type="number" step="any" placeholder="unset" />` +
        `<span class="field-error" hidden></span>` +
        `</label>`,
    )
    .join("");

  const slider = el<HTMLInputElement>("#threshold");
  slider.min = String(THRESHOLD_MIN);
  slider.max = String(THRESHOLD_MAX);
  slider.step = "0.001";
  slider.value = String(THRESHOLD_DEFAULT);

  catHost.addEventListener("change", (event) => {
    const target = event.target as HTMLSelectElement;
    form.categorical[target.name.slice(4)] = target.value;
    refreshValidity();
  });
  numHost.addEventListener("input", (event) => {
    const target = event.target as HTMLInputElement;
    form.numeric[target.name.slice(4)] = target.value;
    refreshValidity();
  });
  slider.addEventListener("input", () => {
    form.threshold = Number(slider.value);
    el<HTMLSpanElement>("#threshold-value").textContent = slider.value;
    refreshValidity();
  });
  el<HTMLInputElement>("#top-k").addEventListener("input", (event) => {
    form.topK = (event.target as HTMLInputElement).value;
    refreshValidity();
  });
  el<HTMLFormElement>("#requirement-form").addEventListener("submit", (event) => {
    event.preventDefault();
    void submit();
  });
}

function refreshValidity(): void {
  const validity = validate(form);
  el<HTMLButtonElement>("#submit").disabled = !validity.ok;
  el<HTMLParagraphElement>("#form-hint").textContent = validity.ok
    ? ""
    : validity.problems.join("; ");
}

function clearFieldErrors(): void {
  for (const span of document.querySelectorAll<HTMLSpanElement>(".field-error")) {
    span.hidden = true;
    span.textContent = "";
  }
}

/** Attach an API validation message to the field it names, if any. */
function placeError(err: ApiError): boolean {
  const attrs = schema.categorical.map((a) => a.name).concat(schema.numeric.map((a) => a.name));
  const named = attrs.find((name) => err.detail.includes(`'${name}'`) || err.detail.includes(name));
  if (!named) return false;
  const field = document.querySelector<HTMLSpanElement>(`.field[data-attr="${named}"] .field-error`);
  if (!field) return false;
  field.textContent = `${err.code}: ${err.detail}`;
  field.hidden = false;
  return true;
}

async function submit(): Promise<void> {
  const ticket = sequencer.next();
  clearFieldErrors();
  lastThreshold = form.threshold;
  const resultsHost = el<HTMLDivElement>("#results");
  resultsHost.setAttribute("aria-busy", "true");
  try {
    const doc = await client.pipeline(toRequirementBody(form));
    if (!sequencer.isCurrent(ticket)) return; // superseded by a newer submit
    app = applyResult(app, doc);
    resultsHost.innerHTML = renderResults(doc, names, app.previousOptimal, lastThreshold);
  } catch (error) {
    if (!sequencer.isCurrent(ticket)) return;
    if (error instanceof ApiError) {
      app = applyError(app, `${error.code}: ${error.detail}`);
      if (!placeError(error)) {
        resultsHost.innerHTML = renderErrorBanner(app.error ?? "request failed", false);
      }
    } else {
      app = applyError(app, "network failure; the service may be down");
      resultsHost.innerHTML = renderErrorBanner(app.error ?? "network failure", true);
      resultsHost.querySelector(".retry")?.addEventListener("click", () => void submit());
    }
  } finally {
    resultsHost.removeAttribute("aria-busy");
  }
}

async function boot(): Promise<void> {
  schema = await client.schema();
  const materials = await client.materials();
  names = Object.fromEntries(materials.map((m) => [m.id, m.name]));
  form = emptyForm(schema);
  buildForm();
  refreshValidity();
  const health = await client.health();
  el<HTMLSpanElement>("#corpus-info").textContent =
    `${health.records} materials, classes ${health.classes.join(", ")}`;
}

void boot().catch((error) => {
  el<HTMLDivElement>("#results").innerHTML = renderErrorBanner(
    `failed to load schema: ${String(error)}`,
    false,
  );
});
