// End-to-end workflow against the live service started by global-setup:
// submit the bundled fixture requirement, render the views, and check the
// what-if behaviors the console promises.

import { readFileSync } from "node:fs";
import { join, resolve } from "node:path";
import { fileURLToPath } from "node:url";
import { beforeAll, describe, expect, it } from "vitest";

import { ApiError, Client } from "../src/api.js";
import { rankedIds } from "../src/state.js";
import { renderComparisonChart, renderResults, renderResultsTable } from "../src/render.js";
import type { PipelineDoc, RequirementBody, SchemaDoc } from "../src/types.js";
import { BASE_URL } from "./global-setup.js";

const here = fileURLToPath(new URL(".", import.meta.url));
const repoRoot = resolve(here, "..", "..");
const fixtureRequirement = JSON.parse(
  readFileSync(join(repoRoot, "src", "matselect", "data", "requirement_example.json"), "utf-8"),
) as RequirementBody;

const client = new Client(BASE_URL);

function withThreshold(threshold: number): RequirementBody {
  return { ...fixtureRequirement, params: { threshold } };
}

describe("live service", () => {
  let schema: SchemaDoc;
  let names: Record<string, string>;

  beforeAll(async () => {
    schema = await client.schema();
    const materials = await client.materials();
    names = Object.fromEntries(materials.map((m) => [m.id, m.name]));
  });

  it("reports a healthy fixture corpus", async () => {
    const health = await client.health();
    expect(health.status).toBe("ok");
    expect(health.records).toBe(20);
    expect(health.classes).toEqual(["P", "C", "M"]);
  });

  it("serves the schema that drives the form", () => {
    expect(schema.categorical).toHaveLength(11);
    expect(schema.numeric.map((a) => a.name)).toContain("density");
    expect(schema.class_labels).toEqual(["P", "C", "M"]);
  });

  it("classifies the fixture requirement as P", async () => {
    const pred = await client.classify(fixtureRequirement);
    expect(pred.predicted).toBe("P");
    const total = Object.values(pred.posteriors).reduce((s, p) => s! + (p ?? 0), 0)!;
    expect(total).toBeCloseTo(1, 6);
  });

  it("renders the fixture workflow: badge, table in served order, chart", async () => {
    const doc = await client.pipeline(withThreshold(0.997));
    expect(doc.prediction.predicted).toBe("P");
    expect(doc.optimal).toBe("P2");

    const html = renderResults(doc, names, null, 0.997);
    expect(html).toContain('data-predicted="P"');

    // table rows equal the API response order
    const ids = [...html.matchAll(/data-id="([^"]+)"/g)].map((m) => m[1]);
    expect(ids).toEqual(doc.results.map((res) => res.material_id));

    // one bar pair per shared numeric attribute
    const chart = renderComparisonChart(doc.comparison!, doc.optimal!);
    expect(chart.match(/<g class="pair"/g)).toHaveLength(doc.comparison!.length);
    expect(doc.comparison!.length).toBe(Object.keys(fixtureRequirement.numeric).length);
  });

  it("never shrinks the ranked set when the threshold is lowered", async () => {
    const thresholds = [0.9995, 0.999, 0.997, 0.99, 0.95, 0.9];
    let previous: string[] = [];
    for (const threshold of thresholds) {
      const doc = await client.pipeline(withThreshold(threshold));
      const ids = rankedIds(doc);
      for (const id of previous) {
        expect(ids).toContain(id);
      }
      expect(ids.length).toBeGreaterThanOrEqual(previous.length);
      previous = ids;
    }
  });

  it("reproduces the identical view when resubmitted without edits", async () => {
    const a = await client.pipeline(withThreshold(0.997));
    const b = await client.pipeline(withThreshold(0.997));
    expect(b).toEqual(a);
    expect(renderResults(b, names, null, 0.997)).toBe(renderResults(a, names, null, 0.997));
  });

  it("re-ranks when one numeric field is edited", async () => {
    const baseline = await client.pipeline(withThreshold(0.997));
    const edited: RequirementBody = {
      ...withThreshold(0.997),
      numeric: { ...fixtureRequirement.numeric, elongation: 55 },
    };
    const doc = await client.pipeline(edited);
    expect(doc.results).not.toEqual(baseline.results);
  });

  it("keeps below-threshold candidates visible in the table", async () => {
    const doc = await client.pipeline(withThreshold(0.997));
    const html = renderResultsTable(doc.results, names, doc.optimal, null);
    expect(html).toContain("BelowThreshold");
    expect(html).toContain("InsufficientOverlap");
  });

  it("shows the empty state at threshold 1.0 against non-identical data", async () => {
    const doc = await client.pipeline(withThreshold(1.0));
    expect(doc.optimal).toBeNull();
    const html = renderResults(doc, names, null, 1.0);
    expect(html).toContain("No material meets the threshold");
  });

  it("surfaces EmptyCategorical as a 422 ApiError", async () => {
    const body: RequirementBody = { categorical: {}, numeric: fixtureRequirement.numeric };
    await expect(client.pipeline(body)).rejects.toMatchObject({
      status: 422,
      code: "EmptyCategorical",
    } satisfies Partial<ApiError>);
  });

  it("surfaces unknown attributes as a 400 ApiError", async () => {
    const body = {
      categorical: { FOO: "Good" },
      numeric: fixtureRequirement.numeric,
    } as RequirementBody;
    await expect(client.pipeline(body)).rejects.toMatchObject({
      status: 400,
      code: "UnknownAttribute",
    } satisfies Partial<ApiError>);
  });

  it("matches the golden document byte for byte over HTTP", async () => {
    const golden = readFileSync(join(repoRoot, "tests", "golden", "pipeline_result.json"), "utf-8");
    const resp = await fetch(`${BASE_URL}/api/pipeline`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(fixtureRequirement),
    });
    expect(resp.status).toBe(200);
    const text = await resp.text();
    expect(text).toBe(golden);
    expect(JSON.parse(text) as PipelineDoc).toEqual(await client.pipeline(fixtureRequirement));
  });
});
