/** DOM wiring: one controller per tab, re-render after every transition. */

import { SearchClient } from "./api.js";
import { renderError, renderExplanation, renderHits, renderNotices } from "./render.js";
import { SearchController } from "./state.js";

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) {
    throw new Error(`missing element #${id}`);
  }
  return el as T;
}

document.addEventListener("DOMContentLoaded", () => {
  const controller = new SearchController(new SearchClient(""));

  const queryInput = byId<HTMLInputElement>("query");
  const kInput = byId<HTMLInputElement>("k");
  const fuzzyBox = byId<HTMLInputElement>("fuzzy");
  const synonymsBox = byId<HTMLInputElement>("synonyms");
  const form = byId<HTMLFormElement>("search-form");
  const resultsEl = byId<HTMLDivElement>("results");
  const noticesEl = byId<HTMLDivElement>("notices");
  const errorEl = byId<HTMLDivElement>("error");
  const explanationEl = byId<HTMLDivElement>("explanation");
  const statsEl = byId<HTMLDivElement>("stats");

  function render(): void {
    resultsEl.innerHTML = renderHits(controller.state);
    noticesEl.innerHTML = renderNotices(controller.state);
    errorEl.innerHTML = renderError(controller.state);
    explanationEl.innerHTML = renderExplanation(controller.state);
    for (const el of resultsEl.querySelectorAll<HTMLElement>(".hit")) {
      el.addEventListener("click", () => {
        const doc = el.dataset.doc;
        if (doc) {
          void controller.showExplanation(doc).then(render);
        }
      });
    }
  }

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    controller.setQuery(queryInput.value);
    controller.state.k = Math.max(1, Number(kInput.value) || 10);
    void controller.runSearch().then(render);
  });

  fuzzyBox.addEventListener("change", () => {
    controller.state.fuzzy = !controller.state.fuzzy; // undo, toggle owns the flip
    void controller.toggleExpansion("fuzzy").then(render);
  });
  synonymsBox.addEventListener("change", () => {
    controller.state.synonyms = !controller.state.synonyms;
    void controller.toggleExpansion("synonyms").then(render);
  });

  new SearchClient("")
    .stats()
    .then((stats) => {
      statsEl.textContent =
        `${stats.docs} docs / ${stats.terms} terms / ` +
        `${stats.postings} postings (${stats.mode})`;
    })
    .catch(() => {
      statsEl.textContent = "service unreachable";
    });

  render();
});
