"""Inverted index and ranking.

Scoring never builds full algebra products: the query-document score
collapses to sum_i (q_i+ - q_i-)(d_i+ - d_i-) over shared terms, so a
posting-list traversal accumulates it touching only matching documents.
``score_oracle`` keeps the full-table route alive as an independent
cross-check, and ``baseline_cosine`` provides the classical positive-
weight cosine for comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .algebra import build_ir_table, est, mul
from .query import (
    HyperQuery,
    SynonymTable,
    compile_query,
    expand_fuzzy,
    expand_synonyms,
    parse_query,
)
from .weighting import (
    MODES,
    DocumentRecord,
    Vocabulary,
    WeightedDoc,
    build_vocabulary,
    to_hypernumber,
    weigh_document,
    weights_to_hypernumber,
)

#: posting entry: (doc_id, w_plus, w_minus)
Posting = Tuple[str, float, float]


@dataclass(frozen=True)
class ScoredHit:
    doc_id: str
    score: float


@dataclass(frozen=True)
class ExplanationRow:
    term: str
    q_plus: float
    q_minus: float
    d_plus: float
    d_minus: float
    contribution: float


@dataclass(frozen=True)
class Explanation:
    """Per-term breakdown of one query-document score.

    ``total`` equals both the sum of row contributions and ``est`` of
    ``product_coeffs`` (the blockwise product in the algebra).
    """

    rows: Tuple[ExplanationRow, ...]
    product_coeffs: Dict[int, float]
    total: float


@dataclass
class InvertedIndex:
    """Immutable-after-build term -> postings structure.

    Posting lists are sorted by doc_id and contain exactly the pairs
    where the document carries some nonzero weight on the term.
    """

    vocab: Vocabulary
    mode: str
    postings: Dict[int, List[Posting]] = field(default_factory=dict)
    doc_table: Dict[str, DocumentRecord] = field(default_factory=dict)
    doc_weights: Dict[str, Dict[int, Tuple[float, float]]] = field(default_factory=dict)
    doc_plus_norms: Dict[str, float] = field(default_factory=dict)

    @property
    def n_docs(self) -> int:
        return len(self.doc_table)

    @property
    def n_postings(self) -> int:
        return sum(len(p) for p in self.postings.values())

    def postings_for(self, term_id: int) -> List[Posting]:
        return self.postings.get(term_id, [])


def build_index(
    docs: Sequence[WeightedDoc],
    vocab: Vocabulary,
    mode: str = "standard",
    records: Optional[Mapping[str, DocumentRecord]] = None,
) -> InvertedIndex:
    """Assemble posting lists from weighed documents.

    ``records`` optionally supplies the stored document metadata; ids
    without a record are kept with empty text.
    """
    if mode not in MODES:
        raise ValueError(f"unknown weighting mode: {mode!r}")
    index = InvertedIndex(vocab=vocab, mode=mode)
    for wd in docs:
        if wd.doc_id in index.doc_table:
            raise ValueError(f"duplicate document id: {wd.doc_id!r}")
        record = records.get(wd.doc_id) if records else None
        index.doc_table[wd.doc_id] = record or DocumentRecord(id=wd.doc_id, text="")
        index.doc_weights[wd.doc_id] = dict(wd.weights)
        index.doc_plus_norms[wd.doc_id] = math.sqrt(
            sum(wp * wp for wp, _ in wd.weights.values())
        )
        for tid, (w_plus, w_minus) in wd.weights.items():
            if not (0 <= tid < vocab.size):
                raise ValueError(f"term id {tid} out of range [0, {vocab.size})")
            if w_plus == 0.0 and w_minus == 0.0:
                continue
            index.postings.setdefault(tid, []).append((wd.doc_id, w_plus, w_minus))
    for plist in index.postings.values():
        plist.sort(key=lambda p: p[0])
    return index


def index_corpus(records: Sequence[DocumentRecord], mode: str = "standard") -> InvertedIndex:
    """Full pipeline: tokenize, build vocabulary, weigh, and index."""
    vocab = build_vocabulary(records)
    docs = [weigh_document(rec, vocab, len(records), mode) for rec in records]
    return build_index(docs, vocab, mode, records={rec.id: rec for rec in records})


def _rank(scores: Mapping[str, float], k: Optional[int]) -> List[ScoredHit]:
    ordered = sorted(scores.items(), key=lambda kv: (-kv[1], kv[0]))
    if k is not None:
        ordered = ordered[:k]
    return [ScoredHit(doc_id=d, score=s) for d, s in ordered]


def score(index: InvertedIndex, q: HyperQuery, k: int) -> List[ScoredHit]:
    """Top-k documents by the signed-weight score.

    Documents sharing no query term are omitted (their score is an
    implicit 0); ties break by doc_id ascending.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    acc: Dict[str, float] = {}
    for tid in sorted(q.weights):
        q_plus, q_minus = q.weights[tid]
        if q_plus == 0.0 and q_minus == 0.0:
            continue
        q_signed = q_plus - q_minus
        for doc_id, d_plus, d_minus in index.postings_for(tid):
            acc[doc_id] = acc.get(doc_id, 0.0) + q_signed * (d_plus - d_minus)
    return _rank(acc, k)


def score_oracle(
    docs: Sequence[WeightedDoc], q: HyperQuery, vocab: Vocabulary
) -> List[ScoredHit]:
    """Reference scorer through the full algebra.

    Embeds query and documents as hypercomplex numbers, multiplies with
    the block table, and evaluates ``est``.  Covers every document,
    including zero scores; same ordering rule as :func:`score`.
    """
    table = build_ir_table(vocab.size)
    q_hn = weights_to_hypernumber(q.weights, vocab.size)
    scores = {
        wd.doc_id: est(mul(table, q_hn, to_hypernumber(wd, vocab))) for wd in docs
    }
    return _rank(scores, None)


def explain(index: InvertedIndex, q: HyperQuery, doc_id: str) -> Explanation:
    """Per-term contributions for one document.

    Rows cover the terms weighted on both sides (query and document);
    the total reproduces :func:`score` for that document.
    """
    doc = index.doc_weights.get(doc_id)
    if doc is None:
        raise ValueError(f"unknown document id: {doc_id!r}")
    rows: List[ExplanationRow] = []
    total = 0.0
    for tid in sorted(q.weights):
        q_plus, q_minus = q.weights[tid]
        if q_plus == 0.0 and q_minus == 0.0:
            continue
        d_plus, d_minus = doc.get(tid, (0.0, 0.0))
        if d_plus == 0.0 and d_minus == 0.0:
            continue
        contribution = (q_plus - q_minus) * (d_plus - d_minus)
        total += contribution
        rows.append(
            ExplanationRow(
                term=index.vocab.term_for(tid),
                q_plus=q_plus,
                q_minus=q_minus,
                d_plus=d_plus,
                d_minus=d_minus,
                contribution=contribution,
            )
        )
    table = build_ir_table(index.vocab.size)
    product = mul(
        table,
        weights_to_hypernumber(q.weights, index.vocab.size),
        weights_to_hypernumber(doc, index.vocab.size),
    )
    return Explanation(rows=tuple(rows), product_coeffs=dict(product.coeffs), total=total)


def baseline_cosine(index: InvertedIndex, q: HyperQuery, k: int) -> List[ScoredHit]:
    """Classical cosine over the positive weights only; w_minus is ignored."""
    if k < 1:
        raise ValueError("k must be >= 1")
    q_norm = math.sqrt(sum(wp * wp for wp, _ in q.weights.values()))
    acc: Dict[str, float] = {}
    for tid in sorted(q.weights):
        q_plus, q_minus = q.weights[tid]
        if q_plus == 0.0 and q_minus == 0.0:
            continue
        for doc_id, d_plus, _ in index.postings_for(tid):
            acc[doc_id] = acc.get(doc_id, 0.0) + q_plus * d_plus
    scores: Dict[str, float] = {}
    for doc_id, dot in acc.items():
        d_norm = index.doc_plus_norms[doc_id]
        scores[doc_id] = dot / (q_norm * d_norm) if q_norm > 0.0 and d_norm > 0.0 else 0.0
    return _rank(scores, k)


@dataclass(frozen=True)
class QueryMetrics:
    precision: float
    recall: float


@dataclass(frozen=True)
class EvalReport:
    per_query: Dict[str, QueryMetrics]
    macro: QueryMetrics


def evaluate(
    runs: Mapping[str, Sequence[str]],
    qrels: Mapping[str, Mapping[str, int]],
    k: int,
) -> EvalReport:
    """Precision@k and recall@k per query plus the macro average.

    ``runs`` maps query id to a ranked doc_id list; documents absent
    from the qrels count as non-relevant.  A query with no relevant
    documents gets recall 0.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    per_query: Dict[str, QueryMetrics] = {}
    for qid, ranked in runs.items():
        if qid not in qrels:
            raise ValueError(f"query id {qid!r} missing from qrels")
        relevant = {doc for doc, rel in qrels[qid].items() if rel > 0}
        top = list(ranked)[:k]
        hits = sum(1 for doc in top if doc in relevant)
        precision = hits / k
        recall = hits / len(relevant) if relevant else 0.0
        per_query[qid] = QueryMetrics(precision=precision, recall=recall)
    n = len(per_query)
    macro = QueryMetrics(
        precision=sum(m.precision for m in per_query.values()) / n if n else 0.0,
        recall=sum(m.recall for m in per_query.values()) / n if n else 0.0,
    )
    return EvalReport(per_query=per_query, macro=macro)


def run_query(
    index: InvertedIndex,
    query_string: str,
    k: int,
    fuzzy: bool = False,
    max_edit: int = 1,
    synonyms: Optional[SynonymTable] = None,
    ranking: str = "hns",
) -> Tuple[List[ScoredHit], List[str]]:
    """Parse, expand, compile, and rank in one step.

    Shared by the CLI and the HTTP service so both produce identical
    results for identical inputs.  ``ranking`` selects the signed-weight
    scorer ("hns") or the cosine baseline ("cosine").
    """
    ast = parse_query(query_string)
    if fuzzy:
        ast = expand_fuzzy(ast, index.vocab, max_edit)
    if synonyms is not None:
        ast = expand_synonyms(ast, synonyms)
    q = compile_query(ast, index.vocab)
    if ranking == "hns":
        hits = score(index, q, k)
    elif ranking == "cosine":
        hits = baseline_cosine(index, q, k)
    else:
        raise ValueError(f"unknown ranking: {ranking!r}")
    return hits, q.unknown_terms


def compile_only(
    index: InvertedIndex,
    query_string: str,
    fuzzy: bool = False,
    max_edit: int = 1,
    synonyms: Optional[SynonymTable] = None,
) -> HyperQuery:
    """The query-preparation half of :func:`run_query`, for explanations."""
    ast = parse_query(query_string)
    if fuzzy:
        ast = expand_fuzzy(ast, index.vocab, max_edit)
    if synonyms is not None:
        ast = expand_synonyms(ast, synonyms)
    return compile_query(ast, index.vocab)
