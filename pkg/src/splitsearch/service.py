"""HTTP API over an index snapshot.

Read endpoints operate on an immutable snapshot; POST /api/index
rebuilds a fresh index under a writer lock and swaps it in atomically,
so concurrent searches see either the old or the new index, never a
mixture.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from .config import EngineConfig
from .index import InvertedIndex, compile_only, explain, index_corpus, run_query
from .query import QueryParseError, SynonymTable, load_synonyms
from .weighting import DocumentRecord


@dataclass
class EngineState:
    """Shared service state: current index snapshot plus query options."""

    index: InvertedIndex
    config: EngineConfig
    synonyms: Optional[SynonymTable] = None
    _write_lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    @classmethod
    def from_config(cls, index: InvertedIndex, config: EngineConfig) -> "EngineState":
        synonyms = load_synonyms(config.synonyms_path) if config.synonyms_path else None
        return cls(index=index, config=config, synonyms=synonyms)

    def rebuild(self, records: list[DocumentRecord]) -> InvertedIndex:
        with self._write_lock:
            new_index = index_corpus(records, self.index.mode)
            self.index = new_index
            return new_index


def _error(status: int, message: str, **extra) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": message, **extra})


def create_app(state: EngineState, console_dir: Optional[str] = None) -> FastAPI:
    app = FastAPI(title="splitsearch")

    @app.get("/api/search")
    def api_search(q: str = "", k: Optional[int] = None, fuzzy: int = 0, synonyms: int = 0):
        if not q.strip():
            return _error(400, "missing or empty query parameter 'q'")
        k_eff = state.config.default_k if k is None else k
        if k_eff < 1:
            return _error(400, "k must be >= 1")
        index = state.index
        try:
            hits, unknown = run_query(
                index,
                q,
                k_eff,
                fuzzy=bool(fuzzy),
                max_edit=state.config.max_edit,
                synonyms=state.synonyms if synonyms else None,
            )
        except QueryParseError as exc:
            return _error(400, str(exc), position=exc.position)
        return {
            "hits": [{"doc_id": h.doc_id, "score": h.score} for h in hits],
            "unknown_terms": unknown,
        }

    @app.get("/api/explain")
    def api_explain(q: str = "", doc: str = "", fuzzy: int = 0, synonyms: int = 0):
        if not q.strip():
            return _error(400, "missing or empty query parameter 'q'")
        if not doc:
            return _error(400, "missing query parameter 'doc'")
        index = state.index
        try:
            compiled = compile_only(
                index,
                q,
                fuzzy=bool(fuzzy),
                max_edit=state.config.max_edit,
                synonyms=state.synonyms if synonyms else None,
            )
        except QueryParseError as exc:
            return _error(400, str(exc), position=exc.position)
        if doc not in index.doc_table:
            return _error(404, f"unknown document id: {doc}")
        result = explain(index, compiled, doc)
        return {
            "rows": [
                {
                    "term": r.term,
                    "q_plus": r.q_plus,
                    "q_minus": r.q_minus,
                    "d_plus": r.d_plus,
                    "d_minus": r.d_minus,
                    "contribution": r.contribution,
                }
                for r in result.rows
            ],
            "total": result.total,
        }

    @app.get("/api/doc/{doc_id}")
    def api_doc(doc_id: str):
        record = state.index.doc_table.get(doc_id)
        if record is None:
            return _error(404, f"unknown document id: {doc_id}")
        return {"id": record.id, "text": record.text}

    @app.get("/api/stats")
    def api_stats():
        index = state.index
        return {
            "docs": index.n_docs,
            "terms": index.vocab.size,
            "postings": index.n_postings,
            "mode": index.mode,
        }

    @app.post("/api/index")
    async def api_index(request: Request):
        try:
            body = await request.json()
        except Exception:
            return _error(400, "request body must be JSON")
        documents = body.get("documents") if isinstance(body, dict) else None
        if not isinstance(documents, list) or not documents:
            return _error(400, "body must be {\"documents\": [{\"id\", \"text\"}, ...]}")
        records = []
        for i, doc in enumerate(documents):
            if (
                not isinstance(doc, dict)
                or not isinstance(doc.get("id"), str)
                or not doc["id"]
                or not isinstance(doc.get("text"), str)
            ):
                return _error(400, f"document #{i} must have string 'id' and 'text'")
            records.append(DocumentRecord(id=doc["id"], text=doc["text"]))
        try:
            new_index = state.rebuild(records)
        except ValueError as exc:
            return _error(400, str(exc))
        return {
            "docs": new_index.n_docs,
            "terms": new_index.vocab.size,
            "postings": new_index.n_postings,
            "mode": new_index.mode,
        }

    if console_dir:
        app.mount("/", StaticFiles(directory=console_dir, html=True), name="console")

    return app
