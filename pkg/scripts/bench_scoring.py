#!/usr/bin/env python3
"""Timing experiment: inverted-index scoring vs the full-algebra oracle.

Generates a synthetic corpus, runs the same queries through both
scorers, and reports wall time per query.  The posting-list route only
touches matching documents; the oracle multiplies every document in
the 2N-dimensional algebra.
"""

import argparse
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from splitsearch.index import build_index, score, score_oracle
from splitsearch.query import HyperQuery
from splitsearch.weighting import WeightedDoc, Vocabulary


def synth_corpus(rng, n_terms, n_docs, terms_per_doc):
    vocab = Vocabulary(
        terms=[f"t{i}" for i in range(n_terms)],
        term_to_id={f"t{i}": i for i in range(n_terms)},
        df=[1] * n_terms,
    )
    docs = [
        WeightedDoc(
            f"doc{d:06d}",
            {tid: (rng.random(), 0.0) for tid in rng.sample(range(n_terms), terms_per_doc)},
        )
        for d in range(n_docs)
    ]
    return vocab, docs


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--terms", type=int, default=2000)
    parser.add_argument("--docs", type=int, default=5000)
    parser.add_argument("--terms-per-doc", type=int, default=20)
    parser.add_argument("--queries", type=int, default=50)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    vocab, docs = synth_corpus(rng, args.terms, args.docs, args.terms_per_doc)

    t0 = time.perf_counter()
    index = build_index(docs, vocab)
    print(f"indexed {args.docs} docs / {args.terms} terms "
          f"in {time.perf_counter() - t0:.3f}s ({index.n_postings} postings)")

    queries = [
        HyperQuery(
            weights={tid: (rng.random(), rng.random() * 0.5)
                     for tid in rng.sample(range(args.terms), 4)},
            unknown_terms=[],
        )
        for _ in range(args.queries)
    ]

    t0 = time.perf_counter()
    for q in queries:
        score(index, q, k=10)
    fast = (time.perf_counter() - t0) / args.queries

    t0 = time.perf_counter()
    for q in queries[: max(1, args.queries // 10)]:
        score_oracle(docs, q, vocab)
    slow = (time.perf_counter() - t0) / max(1, args.queries // 10)

    print(f"inverted index: {fast * 1e3:8.3f} ms/query")
    print(f"algebra oracle: {slow * 1e3:8.3f} ms/query  ({slow / fast:,.0f}x)")


if __name__ == "__main__":
    main()
