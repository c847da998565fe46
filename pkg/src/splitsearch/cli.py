"""Command-line interface: index, search, repl, serve, eval."""

from __future__ import annotations

import argparse
import sys
from typing import Dict, List, Optional, Tuple

from .config import EngineConfig
from .index import (
    InvertedIndex,
    compile_only,
    evaluate,
    explain,
    index_corpus,
    run_query,
)
from .query import QueryParseError, load_synonyms
from .storage import load_index, save_index
from .weighting import read_corpus


def cmd_index(args: argparse.Namespace) -> int:
    records = read_corpus(args.corpus)
    index = index_corpus(records, args.mode)
    save_index(index, args.out)
    print(f"indexed {index.n_docs} docs, {index.vocab.size} terms, "
          f"{index.n_postings} postings ({index.mode} mode) -> {args.out}")
    return 0


def _print_hits(hits, unknown: List[str]) -> None:
    for rank, hit in enumerate(hits, start=1):
        print(f"{rank} {hit.doc_id} {hit.score:.6f}")
    if unknown:
        print(f"# unknown terms: {' '.join(unknown)}")


def cmd_search(args: argparse.Namespace) -> int:
    index = load_index(args.index)
    synonyms = load_synonyms(args.synonyms) if args.synonyms else None
    try:
        hits, unknown = run_query(
            index, args.query, args.k,
            fuzzy=args.fuzzy, max_edit=args.max_edit, synonyms=synonyms,
        )
    except QueryParseError as exc:
        print(f"error: parse error at column {exc.position}: {exc}", file=sys.stderr)
        return 1
    _print_hits(hits, unknown)
    return 0


def _print_explanation(index: InvertedIndex, compiled, doc_id: str) -> None:
    try:
        result = explain(index, compiled, doc_id)
    except ValueError as exc:
        print(f"error: {exc}")
        return
    print("term q+ q- d+ d- contribution")
    for row in result.rows:
        print(f"{row.term} {row.q_plus:.6f} {row.q_minus:.6f} "
              f"{row.d_plus:.6f} {row.d_minus:.6f} {row.contribution:.6f}")
    print(f"total {result.total:.6f}")


def cmd_repl(args: argparse.Namespace) -> int:
    index = load_index(args.index)
    synonyms = load_synonyms(args.synonyms) if args.synonyms else None
    interactive = sys.stdin.isatty()
    last_query: Optional[str] = None
    while True:
        if interactive:
            sys.stdout.write("query> ")
            sys.stdout.flush()
        line = sys.stdin.readline()
        if not line:
            return 0
        line = line.strip()
        if not line:
            continue
        if line == ":quit":
            return 0
        if line.startswith(":explain"):
            parts = line.split(None, 1)
            if len(parts) < 2 or not parts[1].strip():
                print("error: usage :explain <doc_id>")
                continue
            if last_query is None:
                print("error: no query to explain yet")
                continue
            compiled = compile_only(
                index, last_query,
                fuzzy=args.fuzzy, max_edit=args.max_edit, synonyms=synonyms,
            )
            _print_explanation(index, compiled, parts[1].strip())
            continue
        if line.startswith(":"):
            print(f"error: unknown command {line.split()[0]!r}")
            continue
        try:
            hits, unknown = run_query(
                index, line, args.k,
                fuzzy=args.fuzzy, max_edit=args.max_edit, synonyms=synonyms,
            )
        except QueryParseError as exc:
            print(f"error: parse error at column {exc.position}: {exc}")
            continue
        last_query = line
        _print_hits(hits, unknown)


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import EngineState, create_app

    index = load_index(args.index)
    config = EngineConfig(
        index_path=args.index,
        mode=index.mode,
        max_edit=args.max_edit,
        synonyms_path=args.synonyms,
        default_k=args.k,
    )
    state = EngineState.from_config(index, config)
    app = create_app(state, console_dir=args.console)
    host, _, port = args.listen.rpartition(":")
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port))
    return 0


def _read_queries(path: str) -> List[Tuple[str, str]]:
    queries: List[Tuple[str, str]] = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip():
                continue
            parts = line.split("\t", 1)
            if len(parts) != 2 or not parts[0] or not parts[1].strip():
                raise ValueError(f"{path}:{lineno}: expected query_id<TAB>query_string")
            queries.append((parts[0], parts[1]))
    if not queries:
        raise ValueError(f"{path}: no queries")
    return queries


def _read_qrels(path: str) -> Dict[str, Dict[str, int]]:
    qrels: Dict[str, Dict[str, int]] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip():
                continue
            parts = line.split("\t")
            if len(parts) != 3 or parts[2] not in ("0", "1"):
                raise ValueError(
                    f"{path}:{lineno}: expected query_id<TAB>doc_id<TAB>relevance(0|1)"
                )
            qrels.setdefault(parts[0], {})[parts[1]] = int(parts[2])
    if not qrels:
        raise ValueError(f"{path}: no relevance judgments")
    return qrels


def cmd_eval(args: argparse.Namespace) -> int:
    index = load_index(args.index)
    queries = _read_queries(args.queries)
    qrels = _read_qrels(args.qrels)
    missing = [qid for qid, _ in queries if qid not in qrels]
    if missing:
        print(f"error: query ids missing from qrels: {' '.join(missing)}",
              file=sys.stderr)
        return 1
    runs_hns: Dict[str, List[str]] = {}
    runs_cos: Dict[str, List[str]] = {}
    for qid, text in queries:
        hits_hns, _ = run_query(index, text, args.k, ranking="hns")
        hits_cos, _ = run_query(index, text, args.k, ranking="cosine")
        runs_hns[qid] = [h.doc_id for h in hits_hns]
        runs_cos[qid] = [h.doc_id for h in hits_cos]
    report_hns = evaluate(runs_hns, qrels, args.k)
    report_cos = evaluate(runs_cos, qrels, args.k)
    k = args.k
    print(f"query\thns_p@{k}\thns_r@{k}\tcos_p@{k}\tcos_r@{k}")
    for qid, _ in queries:
        h = report_hns.per_query[qid]
        c = report_cos.per_query[qid]
        print(f"{qid}\t{h.precision:.4f}\t{h.recall:.4f}\t{c.precision:.4f}\t{c.recall:.4f}")
    h, c = report_hns.macro, report_cos.macro
    print(f"macro\t{h.precision:.4f}\t{h.recall:.4f}\t{c.precision:.4f}\t{c.recall:.4f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splitsearch",
        description="Signed term-weight retrieval over a split-complex algebra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("index", help="build an index from a corpus file")
    p.add_argument("--corpus", required=True, help="newline-delimited JSON corpus")
    p.add_argument("--out", required=True, help="output index path")
    p.add_argument("--mode", choices=["standard", "complement"], default="standard")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("search", help="run one query against an index")
    p.add_argument("--index", required=True)
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--fuzzy", action="store_true")
    p.add_argument("--max-edit", type=int, choices=[1, 2], default=1)
    p.add_argument("--synonyms", help="tab-separated synonym file")
    p.add_argument("query", help="query string; put -- before queries starting with '-'")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("repl", help="interactive search loop")
    p.add_argument("--index", required=True)
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--fuzzy", action="store_true")
    p.add_argument("--max-edit", type=int, choices=[1, 2], default=1)
    p.add_argument("--synonyms")
    p.set_defaults(func=cmd_repl)

    p = sub.add_parser("serve", help="run the HTTP API")
    p.add_argument("--index", required=True)
    p.add_argument("--listen", default="127.0.0.1:8080", help="host:port")
    p.add_argument("--k", type=int, default=10)
    p.add_argument("--max-edit", type=int, choices=[1, 2], default=1)
    p.add_argument("--synonyms")
    p.add_argument("--console", help="directory of console static files to serve")
    p.set_defaults(func=cmd_serve)

    p = sub.add_parser("eval", help="precision/recall against relevance judgments")
    p.add_argument("--index", required=True)
    p.add_argument("--queries", required=True, help="query_id<TAB>query per line")
    p.add_argument("--qrels", required=True, help="query_id<TAB>doc_id<TAB>0|1 per line")
    p.add_argument("--k", type=int, default=10)
    p.set_defaults(func=cmd_eval)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
