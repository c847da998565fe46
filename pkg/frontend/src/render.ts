/** Pure view functions: state in, HTML string out.
 *
 * Scores are rounded to 4 decimals for display; the title attribute
 * carries the full-precision value received from the API.
 */

import { SearchViewState } from "./state.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function formatScore(score: number): string {
  return score.toFixed(4);
}

export function renderHits(state: SearchViewState): string {
  if (state.hits.length === 0) {
    return '<p class="empty">no results</p>';
  }
  const rows = state.hits
    .map((hit, i) => {
      const negative = hit.score < 0 ? " negative" : "";
      const selected = hit.doc_id === state.selectedDoc ? " selected" : "";
      return (
        `<li class="hit${negative}${selected}" data-doc="${escapeHtml(hit.doc_id)}">` +
        `<span class="rank">${i + 1}</span>` +
        `<span class="doc-id">${escapeHtml(hit.doc_id)}</span>` +
        `<span class="score" title="${hit.score}">${formatScore(hit.score)}</span>` +
        `</li>`
      );
    })
    .join("");
  return `<ol class="hits">${rows}</ol>`;
}

export function renderNotices(state: SearchViewState): string {
  const parts: string[] = [];
  if (state.unknownTerms.length > 0) {
    parts.push(
      `<p class="notice">unknown terms: ${state.unknownTerms
        .map(escapeHtml)
        .join(", ")}</p>`,
    );
  }
  if (state.notice) {
    parts.push(`<p class="notice">${escapeHtml(state.notice)}</p>`);
  }
  return parts.join("");
}

export function renderError(state: SearchViewState): string {
  if (!state.error) {
    return "";
  }
  return `<div class="error-banner">${escapeHtml(state.error)}</div>`;
}

export function renderExplanation(state: SearchViewState): string {
  if (!state.selectedDoc || !state.explanation) {
    return '<p class="empty">select a result to see its breakdown</p>';
  }
  const { rows, total } = state.explanation;
  const maxAbs = Math.max(1e-12, ...rows.map((r) => Math.abs(r.contribution)));
  const body = rows
    .map((row) => {
      const width = Math.round((Math.abs(row.contribution) / maxAbs) * 100);
      const side = row.contribution < 0 ? "bar-negative" : "bar-positive";
      return (
        `<tr>` +
        `<td>${escapeHtml(row.term)}</td>` +
        `<td title="${row.q_plus}">${formatScore(row.q_plus)}</td>` +
        `<td title="${row.q_minus}">${formatScore(row.q_minus)}</td>` +
        `<td title="${row.d_plus}">${formatScore(row.d_plus)}</td>` +
        `<td title="${row.d_minus}">${formatScore(row.d_minus)}</td>` +
        `<td class="contribution" title="${row.contribution}">` +
        `<span class="bar ${side}" style="width:${width}%"></span>` +
        `${formatScore(row.contribution)}</td>` +
        `</tr>`
      );
    })
    .join("");
  return (
    `<h3>breakdown: ${escapeHtml(state.selectedDoc)}</h3>` +
    `<table class="explanation">` +
    `<thead><tr><th>term</th><th>q+</th><th>q-</th><th>d+</th><th>d-</th>` +
    `<th>contribution</th></tr></thead>` +
    `<tbody>${body}</tbody>` +
    `<tfoot><tr><td colspan="5">total</td>` +
    `<td title="${total}">${formatScore(total)}</td></tr></tfoot>` +
    `</table>`
  );
}
