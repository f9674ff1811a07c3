import { describe, expect, it } from "vitest";

import {
  escapeHtml,
  renderBadge,
  renderComparisonChart,
  renderEmptyState,
  renderResults,
  renderResultsTable,
} from "../src/render.js";
import type { PipelineDoc } from "../src/types.js";

const doc: PipelineDoc = {
  prediction: {
    predicted: "P",
    posteriors: { P: 0.9875770783, C: 0.0114673123, M: 0.0009556094 },
    log_scores: { P: -3.68, C: -8.13, M: -10.62 },
  },
  class_member_count: 6,
  results: [
    { material_id: "P2", r: 0.99938512, status: "Ranked", rank: 1 },
    { material_id: "P1", r: 0.9984417855, status: "Ranked", rank: 2 },
    { material_id: "P4", r: 0.346533771, status: "BelowThreshold", rank: null },
    { material_id: "P5", r: null, status: "InsufficientOverlap", rank: null },
  ],
  optimal: "P2",
  comparison: [
    { attribute: "density", unit: "g_cm3", requirement: 0.92, material: 0.91 },
    { attribute: "tensile_strength", unit: "MPa", requirement: 35, material: 33 },
    { attribute: "melting_point", unit: "C", requirement: 170, material: 165 },
  ],
};

const names = { P1: "Polyethylene (HDPE)", P2: "Polypropylene", P4: "PVC (rigid)", P5: "PTFE" };

function dataIdOrder(html: string): string[] {
  return [...html.matchAll(/data-id="([^"]+)"/g)].map((m) => m[1]!);
}

describe("badge", () => {
  it("shows the predicted class with one posterior bar per class", () => {
    const html = renderBadge(doc.prediction);
    expect(html).toContain('data-predicted="P"');
    expect(html.match(/class="posterior[ "]/g)).toHaveLength(3);
    expect(html).toContain("98.8%");
  });
});

describe("results table", () => {
  it("keeps rows exactly in served order", () => {
    const html = renderResultsTable(doc.results, names, doc.optimal, null);
    expect(dataIdOrder(html)).toEqual(["P2", "P1", "P4", "P5"]);
  });

  it("renders statuses verbatim and r to six decimals", () => {
    const html = renderResultsTable(doc.results, names, doc.optimal, null);
    expect(html).toContain("Ranked");
    expect(html).toContain("BelowThreshold");
    expect(html).toContain("InsufficientOverlap");
    expect(html).toContain("0.999385");
    expect(html).toContain("Polypropylene");
  });

  it("marks the optimal and the previous pick", () => {
    const html = renderResultsTable(doc.results, names, "P2", "P1");
    expect(html).toContain('class="optimal" data-id="P2"');
    expect(html).toContain("previous pick");
  });

  it("escapes names", () => {
    const html = renderResultsTable(
      [{ material_id: "x", r: null, status: "UndefinedCorrelation", rank: null }],
      { x: '<script>"&' },
      null,
      null,
    );
    expect(html).not.toContain("<script>");
    expect(html).toContain("&lt;script&gt;");
  });
});

describe("comparison chart", () => {
  it("draws one bar pair per shared attribute", () => {
    const html = renderComparisonChart(doc.comparison!, "P2");
    expect(html.match(/<g class="pair"/g)).toHaveLength(3);
    expect(html.match(/class="bar requirement"/g)).toHaveLength(4); // 3 pairs + legend
    expect(html.match(/class="bar material"/g)).toHaveLength(4);
    expect(html).toContain('data-attribute="density"');
  });
});

describe("full results view", () => {
  it("combines badge, count, table, and chart", () => {
    const html = renderResults(doc, names, null, 0.997);
    expect(html).toContain('data-predicted="P"');
    expect(html).toContain("6 material(s) in class P");
    expect(dataIdOrder(html)).toEqual(["P2", "P1", "P4", "P5"]);
    expect(html).toContain("Requirement vs P2");
  });

  it("shows the empty state when nothing is ranked", () => {
    const none: PipelineDoc = {
      ...doc,
      results: doc.results.map((r) => ({ ...r, status: "BelowThreshold", rank: null })),
      optimal: null,
      comparison: null,
    };
    const html = renderResults(none, names, null, 1.0);
    expect(html).toContain("No material meets the threshold");
    expect(html).toContain("r ≥ 1");
  });
});

describe("escapeHtml", () => {
  it("escapes the usual suspects", () => {
    expect(escapeHtml(`<a href="x">&`)).toBe("&lt;a href=&quot;x&quot;&gt;&amp;");
  });
});

describe("empty state", () => {
  it("names the active threshold", () => {
    expect(renderEmptyState(0.999)).toContain("0.999");
  });
});
