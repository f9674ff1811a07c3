import type { ComparisonRowDoc, PipelineDoc, PredictionDoc, SelectionResultDoc } from "./types.js";

// Pure HTML-string renderers. No DOM access here so the view layer can be
// unit-tested in plain node; main.ts mounts the strings. All numbers shown
// come straight from API documents (display formatting only, no math beyond
// bar scaling).

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function fmt(value: number | null): string {
  if (value === null) return "–";
  return Number.isInteger(value) ? String(value) : String(value);
}

export function renderBadge(prediction: PredictionDoc): string {
  const bars = Object.entries(prediction.posteriors)
    .map(([label, p]) => {
      const pct = p === null ? 0 : Math.round(p * 1000) / 10;
      const active = label === prediction.predicted ? " active" : "";
      return (
        `<div class="posterior${active}" data-class="${escapeHtml(label)}">` +
        `<span class="posterior-label">${escapeHtml(label)}</span>` +
        `<span class="posterior-track"><span class="posterior-fill" style="width:${pct}%"></span></span>` +
        `<span class="posterior-value">${pct.toFixed(1)}%</span>` +
        `</div>`
      );
    })
    .join("");
  return (
    `<div class="prediction">` +
    `<span class="badge" data-predicted="${escapeHtml(prediction.predicted)}">${escapeHtml(prediction.predicted)}</span>` +
    `<div class="posteriors">${bars}</div>` +
    `</div>`
  );
}

export function renderResultsTable(
  results: SelectionResultDoc[],
  names: Record<string, string>,
  optimal: string | null,
  previousOptimal: string | null,
): string {
  // rows appear exactly in served order; statuses verbatim from the API
  const rows = results
    .map((res) => {
      const classes: string[] = [];
      if (res.material_id === optimal) classes.push("optimal");
      if (res.material_id === previousOptimal) classes.push("previous");
      const marks = [
        res.material_id === optimal ? `<span class="mark">optimal</span>` : "",
        res.material_id === previousOptimal && res.material_id !== optimal
          ? `<span class="mark previous-pick">previous pick</span>`
          : "",
      ].join("");
      return (
        `<tr class="${classes.join(" ")}" data-id="${escapeHtml(res.material_id)}">` +
        `<td>${res.rank ?? ""}</td>` +
        `<td>${escapeHtml(res.material_id)}${marks}</td>` +
        `<td>${escapeHtml(names[res.material_id] ?? "")}</td>` +
        `<td class="num">${res.r === null ? "–" : res.r.toFixed(6)}</td>` +
        `<td class="status">${escapeHtml(res.status)}</td>` +
        `</tr>`
      );
    })
    .join("");
  return (
    `<table class="results"><thead><tr>` +
    `<th>rank</th><th>id</th><th>name</th><th>r</th><th>status</th>` +
    `</tr></thead><tbody>${rows}</tbody></table>`
  );
}

export function renderEmptyState(threshold: number): string {
  return `<p class="empty-state">No material meets the threshold r ≥ ${threshold}. Lower the threshold to widen the candidate range.</p>`;
}

/** Grouped bars, one requirement/material pair per shared attribute. Bars
 * are scaled per attribute (units differ wildly across properties). */
export function renderComparisonChart(comparison: ComparisonRowDoc[], optimalId: string): string {
  const pairWidth = 90;
  const height = 190;
  const plotHeight = 120;
  const width = Math.max(comparison.length * pairWidth, pairWidth);
  const pairs = comparison
    .map((row, i) => {
      const scale = Math.max(Math.abs(row.requirement), Math.abs(row.material), 1e-12);
      const reqH = Math.round((Math.abs(row.requirement) / scale) * plotHeight);
      const matH = Math.round((Math.abs(row.material) / scale) * plotHeight);
      const x = i * pairWidth;
      return (
        `<g class="pair" data-attribute="${escapeHtml(row.attribute)}" transform="translate(${x},0)">` +
        `<rect class="bar requirement" x="18" y="${20 + plotHeight - reqH}" width="22" height="${reqH}"><title>requirement ${fmt(row.requirement)} ${escapeHtml(row.unit)}</title></rect>` +
        `<rect class="bar material" x="46" y="${20 + plotHeight - matH}" width="22" height="${matH}"><title>${escapeHtml(optimalId)} ${fmt(row.material)} ${escapeHtml(row.unit)}</title></rect>` +
        `<text class="attr-label" x="${pairWidth / 2}" y="${20 + plotHeight + 16}" text-anchor="middle">${escapeHtml(row.attribute)}</text>` +
        `<text class="attr-values" x="${pairWidth / 2}" y="${20 + plotHeight + 32}" text-anchor="middle">${fmt(row.requirement)} / ${fmt(row.material)} ${escapeHtml(row.unit)}</text>` +
        `</g>`
      );
    })
    .join("");
  return (
    `<svg class="comparison" viewBox="0 0 ${width} ${height}" role="img" ` +
    `aria-label="requirement vs ${escapeHtml(optimalId)} per shared attribute">` +
    `<g class="legend"><rect class="bar requirement" x="0" y="0" width="12" height="12"></rect>` +
    `<text x="16" y="10">requirement</text>` +
    `<rect class="bar material" x="110" y="0" width="12" height="12"></rect>` +
    `<text x="126" y="10">${escapeHtml(optimalId)}</text></g>` +
    pairs +
    `</svg>`
  );
}

export function renderResults(
  doc: PipelineDoc,
  names: Record<string, string>,
  previousOptimal: string | null,
  threshold: number,
): string {
  const parts = [renderBadge(doc.prediction)];
  parts.push(
    `<p class="candidate-count">${doc.class_member_count} material(s) in class ${escapeHtml(doc.prediction.predicted)}</p>`,
  );
  const anyRanked = doc.results.some((res) => res.status === "Ranked");
  if (!anyRanked) {
    parts.push(renderEmptyState(threshold));
  }
  if (doc.results.length > 0) {
    parts.push(renderResultsTable(doc.results, names, doc.optimal, previousOptimal));
  }
  if (doc.optimal !== null && doc.comparison !== null && doc.comparison.length > 0) {
    parts.push(`<h3>Requirement vs ${escapeHtml(doc.optimal)}</h3>`);
    parts.push(renderComparisonChart(doc.comparison, doc.optimal));
  }
  return parts.join("\n");
}

export function renderErrorBanner(message: string, retryable: boolean): string {
  const retry = retryable ? `<button type="button" class="retry">Retry</button>` : "";
  return `<div class="error-banner">${escapeHtml(message)}${retry}</div>`;
}
