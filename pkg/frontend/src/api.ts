/** Typed client for the search service HTTP API. */

export interface Hit {
  doc_id: string;
  score: number;
}

export interface SearchResponse {
  hits: Hit[];
  unknown_terms: string[];
}

export interface ExplanationRow {
  term: string;
  q_plus: number;
  q_minus: number;
  d_plus: number;
  d_minus: number;
  contribution: number;
}

export interface ExplainResponse {
  rows: ExplanationRow[];
  total: number;
}

export interface StatsResponse {
  docs: number;
  terms: number;
  postings: number;
  mode: string;
}

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
  }
}

async function getJson<T>(url: string): Promise<T> {
  const response = await fetch(url);
  const body = await response.json().catch(() => null);
  if (!response.ok) {
    const detail =
      body && typeof body.error === "string"
        ? body.error
        : `request failed with status ${response.status}`;
    throw new ApiError(response.status, detail);
  }
  return body as T;
}

export interface ExpansionFlags {
  fuzzy: boolean;
  synonyms: boolean;
}

export class SearchClient {
  constructor(private readonly baseUrl: string = "") {}

  search(q: string, k: number, flags: ExpansionFlags): Promise<SearchResponse> {
    const params = new URLSearchParams({
      q,
      k: String(k),
      fuzzy: flags.fuzzy ? "1" : "0",
      synonyms: flags.synonyms ? "1" : "0",
    });
    return getJson(`${this.baseUrl}/api/search?${params}`);
  }

  explain(q: string, doc: string, flags: ExpansionFlags): Promise<ExplainResponse> {
    const params = new URLSearchParams({
      q,
      doc,
      fuzzy: flags.fuzzy ? "1" : "0",
      synonyms: flags.synonyms ? "1" : "0",
    });
    return getJson(`${this.baseUrl}/api/explain?${params}`);
  }

  stats(): Promise<StatsResponse> {
    return getJson(`${this.baseUrl}/api/stats`);
  }
}
