"""Query mini-language: parsing, expansion, and compilation.

Grammar (whitespace-separated clauses):

    query  = clause { ws clause }
    clause = [ weight ":" ] [ "-" ] term [ "~" ]
    weight = real in [0, 1]
    term   = one or more letters/digits

"-" marks a clause negated (its weight lands on the negative side),
"~" marks it fuzzy (eligible for edit-distance expansion).  Terms are
lowercased during parsing.  Expansion passes only ever append clauses;
compilation merges per-term contributions by taking the maximum on each
side, so weights never leave [0, 1].
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .weighting import Vocabulary

ORIGIN_USER = "user"
ORIGIN_FUZZY = "fuzzy-expansion"
ORIGIN_SYNONYM = "synonym-expansion"


class QueryParseError(ValueError):
    """Malformed query; ``position`` is the 0-based offset of the fault."""

    def __init__(self, message: str, position: int):
        super().__init__(message)
        self.position = position


@dataclass(frozen=True)
class Clause:
    term: str
    weight: float = 1.0
    negated: bool = False
    fuzzy: bool = False
    origin: str = ORIGIN_USER


@dataclass(frozen=True)
class QueryAST:
    clauses: Tuple[Clause, ...]


@dataclass(frozen=True)
class HyperQuery:
    """Compiled query: term_id -> (w_plus, w_minus), plus unresolved terms."""

    weights: Dict[int, Tuple[float, float]] = field(default_factory=dict)
    unknown_terms: List[str] = field(default_factory=list)


@dataclass(frozen=True)
class SynonymTable:
    """term -> [(synonym, prob)] with prob in (0, 1] and no self-entries."""

    entries: Dict[str, List[Tuple[str, float]]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for term, alts in self.entries.items():
            for synonym, prob in alts:
                if synonym == term:
                    raise ValueError(f"self-synonym for {term!r}")
                if not (0.0 < prob <= 1.0):
                    raise ValueError(
                        f"synonym probability for {term!r} -> {synonym!r} "
                        f"must be in (0, 1], got {prob}"
                    )


def load_synonyms(path: str) -> SynonymTable:
    """Read a tab-separated synonym file: term<TAB>synonym<TAB>prob per line."""
    entries: Dict[str, List[Tuple[str, float]]] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line.strip():
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise ValueError(f"{path}:{lineno}: expected term<TAB>synonym<TAB>prob")
            term, synonym, prob_text = parts
            try:
                prob = float(prob_text)
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: bad probability {prob_text!r}") from exc
            entries.setdefault(term.lower(), []).append((synonym.lower(), prob))
    return SynonymTable(entries)


def parse_query(q: str) -> QueryAST:
    """Parse a query string; raises :class:`QueryParseError` with position."""
    clauses: List[Clause] = []
    pos = 0
    length = len(q)
    while pos < length:
        if q[pos].isspace():
            pos += 1
            continue
        start = pos
        while pos < length and not q[pos].isspace():
            pos += 1
        clauses.append(_parse_clause(q[start:pos], start))
    if not clauses:
        raise QueryParseError("empty query", 0)
    return QueryAST(tuple(clauses))


def _parse_clause(token: str, offset: int) -> Clause:
    weight = 1.0
    rest = token
    if ":" in token:
        weight_text, rest = token.split(":", 1)
        try:
            weight = float(weight_text)
        except ValueError:
            raise QueryParseError(
                f"malformed weight {weight_text!r}: not a number", offset
            ) from None
        if not (0.0 <= weight <= 1.0):
            raise QueryParseError(
                f"malformed weight {weight_text!r}: outside [0, 1]", offset
            )
        if not rest:
            raise QueryParseError("dangling ':' with no term", offset)
    negated = rest.startswith("-")
    if negated:
        rest = rest[1:]
        if not rest:
            raise QueryParseError("dangling '-' with no term", offset)
    fuzzy = rest.endswith("~")
    if fuzzy:
        rest = rest[:-1]
        if not rest:
            raise QueryParseError("dangling '~' with no term", offset)
    if not rest.isalnum():
        raise QueryParseError(f"invalid term {rest!r}: letters and digits only", offset)
    return Clause(term=rest.lower(), weight=weight, negated=negated, fuzzy=fuzzy)


def damerau_levenshtein(a: str, b: str) -> int:
    """Unrestricted Damerau-Levenshtein distance (insert, delete,
    substitute, transpose; edits between transposed characters allowed)."""
    if a == b:
        return 0
    la, lb = len(a), len(b)
    inf = la + lb
    last_seen: Dict[str, int] = {}
    # (la+2) x (lb+2) score matrix with a sentinel border of `inf`.
    d = [[inf] * (lb + 2) for _ in range(la + 2)]
    for i in range(la + 1):
        d[i + 1][1] = i
    for j in range(lb + 1):
        d[1][j + 1] = j
    for i in range(1, la + 1):
        last_match_col = 0
        for j in range(1, lb + 1):
            i1 = last_seen.get(b[j - 1], 0)
            j1 = last_match_col
            cost = 0 if a[i - 1] == b[j - 1] else 1
            if cost == 0:
                last_match_col = j
            d[i + 1][j + 1] = min(
                d[i][j] + cost,
                d[i + 1][j] + 1,
                d[i][j + 1] + 1,
                d[i1][j1] + (i - i1 - 1) + 1 + (j - j1 - 1),
            )
        last_seen[a[i - 1]] = i
    return d[la + 1][lb + 1]


def expand_fuzzy(ast: QueryAST, vocab: Vocabulary, max_edit: int = 1) -> QueryAST:
    """Append vocabulary neighbors of fuzzy clauses, damped by distance.

    A neighbor at distance d (1 <= d <= max_edit) joins with weight
    parent.weight / (1 + d); negation is inherited.  Existing clauses
    are never touched.
    """
    if max_edit not in (1, 2):
        raise ValueError("max_edit must be 1 or 2")
    added: List[Clause] = []
    for clause in ast.clauses:
        if not clause.fuzzy:
            continue
        for tid, term in enumerate(vocab.terms):
            if len(term) - len(clause.term) > max_edit or \
                    len(clause.term) - len(term) > max_edit:
                continue
            dist = damerau_levenshtein(clause.term, term)
            if 1 <= dist <= max_edit:
                added.append(
                    Clause(
                        term=term,
                        weight=clause.weight / (1 + dist),
                        negated=clause.negated,
                        fuzzy=False,
                        origin=ORIGIN_FUZZY,
                    )
                )
    return QueryAST(ast.clauses + tuple(added))


def expand_synonyms(ast: QueryAST, syn: SynonymTable) -> QueryAST:
    """Append one level of synonyms for user-written clauses.

    Each synonym joins with weight parent.weight * prob and inherits
    negation; expansion-produced clauses are not expanded further.
    """
    added: List[Clause] = []
    for clause in ast.clauses:
        if clause.origin != ORIGIN_USER:
            continue
        for synonym, prob in syn.entries.get(clause.term, ()):
            added.append(
                Clause(
                    term=synonym,
                    weight=clause.weight * prob,
                    negated=clause.negated,
                    fuzzy=False,
                    origin=ORIGIN_SYNONYM,
                )
            )
    return QueryAST(ast.clauses + tuple(added))


def compile_query(ast: QueryAST, vocab: Vocabulary) -> HyperQuery:
    """Merge clauses into per-term signed weights.

    Negated clauses contribute to the negative side, others to the
    positive side; repeated contributions to one side merge by maximum.
    Terms missing from the vocabulary are collected, not scored.
    """
    weights: Dict[int, Tuple[float, float]] = {}
    unknown: List[str] = []
    for clause in ast.clauses:
        tid = vocab.id_for(clause.term)
        if tid is None:
            if clause.term not in unknown:
                unknown.append(clause.term)
            continue
        w_plus, w_minus = weights.get(tid, (0.0, 0.0))
        if clause.negated:
            w_minus = max(w_minus, clause.weight)
        else:
            w_plus = max(w_plus, clause.weight)
        weights[tid] = (w_plus, w_minus)
    return HyperQuery(weights=weights, unknown_terms=unknown)
