/** Console state machine.
 *
 * All numbers in the state arrive from the API verbatim; the console
 * never scores anything itself.  At most one search is in flight: each
 * request gets a sequence number and only the latest response may
 * update the state (stale responses are dropped).
 */

import {
  ApiError,
  ExplainResponse,
  Hit,
  SearchClient,
} from "./api.js";

export interface SearchViewState {
  query: string;
  fuzzy: boolean;
  synonyms: boolean;
  k: number;
  hits: Hit[];
  unknownTerms: string[];
  selectedDoc: string | null;
  explanation: ExplainResponse | null;
  notice: string | null;
  error: string | null;
}

export function initialState(): SearchViewState {
  return {
    query: "",
    fuzzy: false,
    synonyms: false,
    k: 10,
    hits: [],
    unknownTerms: [],
    selectedDoc: null,
    explanation: null,
    notice: null,
    error: null,
  };
}

export class SearchController {
  state: SearchViewState;
  private searchSeq = 0;

  constructor(private readonly client: SearchClient, state?: SearchViewState) {
    this.state = state ?? initialState();
  }

  setQuery(text: string): void {
    this.state.query = text;
  }

  /** Issue a search for the current query; no request if it is empty. */
  async runSearch(): Promise<SearchViewState> {
    const query = this.state.query.trim();
    if (!query) {
      return this.state;
    }
    const seq = ++this.searchSeq;
    try {
      const response = await this.client.search(query, this.state.k, {
        fuzzy: this.state.fuzzy,
        synonyms: this.state.synonyms,
      });
      if (seq !== this.searchSeq) {
        return this.state; // superseded by a newer search
      }
      this.state.hits = response.hits;
      this.state.unknownTerms = response.unknown_terms;
      this.state.error = null;
      this.state.notice = null;
      // the selected doc must stay one of the current hits
      if (!response.hits.some((h) => h.doc_id === this.state.selectedDoc)) {
        this.state.selectedDoc = null;
        this.state.explanation = null;
      }
    } catch (err) {
      if (seq !== this.searchSeq) {
        return this.state;
      }
      // previous results are retained on failure
      this.state.error = err instanceof Error ? err.message : String(err);
    }
    return this.state;
  }

  /** Fetch the per-term breakdown for one of the current hits. */
  async showExplanation(docId: string): Promise<SearchViewState> {
    if (!this.state.hits.some((h) => h.doc_id === docId)) {
      this.state.notice = `document ${docId} is not among the current hits`;
      return this.state;
    }
    try {
      const response = await this.client.explain(this.state.query.trim(), docId, {
        fuzzy: this.state.fuzzy,
        synonyms: this.state.synonyms,
      });
      this.state.selectedDoc = docId;
      this.state.explanation = response;
      this.state.notice = null;
    } catch (err) {
      if (err instanceof ApiError && err.status === 404) {
        // the document was reindexed away under us
        this.state.notice = `document ${docId} is no longer in the index`;
      } else {
        this.state.error = err instanceof Error ? err.message : String(err);
      }
    }
    return this.state;
  }

  /** Flip an expansion flag and re-run the current query, if any. */
  async toggleExpansion(flag: "fuzzy" | "synonyms"): Promise<SearchViewState> {
    this.state[flag] = !this.state[flag];
    if (!this.state.query.trim()) {
      return this.state;
    }
    return this.runSearch();
  }
}
