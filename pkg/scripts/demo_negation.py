#!/usr/bin/env python3
"""Negation demo: signed scoring vs the positive-only cosine baseline.

Builds a tiny corpus where a distractor document contains the negated
query term, then shows that the signed score demotes it while cosine
promotes it.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from splitsearch.index import evaluate, explain, index_corpus, run_query
from splitsearch.query import compile_query, parse_query
from splitsearch.weighting import DocumentRecord


def show_run(title, hits, unknown):
    print(f"\n{title}")
    for rank, hit in enumerate(hits, start=1):
        print(f"  {rank}. {hit.doc_id:6s} {hit.score:+.4f}")
    if unknown:
        print(f"  (unknown terms: {', '.join(unknown)})")


def main():
    records = [
        DocumentRecord("wine", "good wine"),
        DocumentRecord("spam", "good good bad"),
        DocumentRecord("misc", "other stuff"),
    ]
    index = index_corpus(records)
    query = "good -bad"
    print(f"corpus: {[r.id for r in records]}")
    print(f"query:  {query!r}")

    hns_hits, unknown = run_query(index, query, k=3)
    show_run("signed ranking (negated term counts against)", hns_hits, unknown)
    cos_hits, _ = run_query(index, query, k=3, ranking="cosine")
    show_run("cosine baseline (negative weights ignored)", cos_hits, [])

    compiled = compile_query(parse_query(query), index.vocab)
    print("\nper-term breakdown for 'spam':")
    result = explain(index, compiled, "spam")
    for row in result.rows:
        print(
            f"  {row.term:6s} q=({row.q_plus:.2f},{row.q_minus:.2f}) "
            f"d=({row.d_plus:.2f},{row.d_minus:.2f}) -> {row.contribution:+.4f}"
        )
    print(f"  total {result.total:+.4f}")

    qrels = {"q1": {"wine": 1, "spam": 0}}
    report_hns = evaluate({"q1": [h.doc_id for h in hns_hits]}, qrels, k=1)
    report_cos = evaluate({"q1": [h.doc_id for h in cos_hits]}, qrels, k=1)
    print(f"\np@1 signed={report_hns.macro.precision:.1f} "
          f"cosine={report_cos.macro.precision:.1f}")


if __name__ == "__main__":
    main()
