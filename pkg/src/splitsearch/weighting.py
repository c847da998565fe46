"""Tokenization, vocabulary construction, and signed term weighting.

Documents are plain text; weighing turns each one into a sparse map
term_id -> (w_plus, w_minus) with both weights in [0, 1].  The single
normative formula is log-scaled term frequency times smoothed inverse
document frequency, max-normalized per document:

    raw_i  = (1 + ln tf_i) * ln((1 + |corpus|) / (1 + df_i))
    w_plus = raw_i / max_j raw_j        (0 if every raw is 0)

Standard mode leaves w_minus at 0; complement mode sets
w_minus = 1 - w_plus so the two sides always sum to 1.
"""

from __future__ import annotations

import json
import math
import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from .algebra import HyperNumber

MODES = ("standard", "complement")

_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)


@dataclass(frozen=True)
class DocumentRecord:
    """One raw corpus entry."""

    id: str
    text: str

    def __post_init__(self) -> None:
        if not self.id:
            raise ValueError("document id must be nonempty")


@dataclass
class Vocabulary:
    """Frozen term <-> id mapping with per-term document frequencies.

    Ids are dense integers 0..N-1 assigned in first-occurrence order.
    """

    terms: List[str] = field(default_factory=list)
    term_to_id: Dict[str, int] = field(default_factory=dict)
    df: List[int] = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.terms)

    def id_for(self, term: str) -> Optional[int]:
        return self.term_to_id.get(term)

    def term_for(self, term_id: int) -> str:
        return self.terms[term_id]


@dataclass(frozen=True)
class WeightedDoc:
    """Signed weights of one document: term_id -> (w_plus, w_minus)."""

    doc_id: str
    weights: Dict[int, Tuple[float, float]] = field(default_factory=dict)


def tokenize(text: str) -> List[str]:
    """Lowercase tokens split on any non-alphanumeric character.

    Empty tokens are dropped; order is preserved.
    """
    return _TOKEN_RE.findall(text.lower())


def build_vocabulary(corpus: Iterable[DocumentRecord]) -> Vocabulary:
    """Assign ids in first-occurrence order and count document frequencies."""
    vocab = Vocabulary()
    seen_ids: set[str] = set()
    n_docs = 0
    for doc in corpus:
        if doc.id in seen_ids:
            raise ValueError(f"duplicate document id: {doc.id!r}")
        seen_ids.add(doc.id)
        n_docs += 1
        for term in dict.fromkeys(tokenize(doc.text)):
            tid = vocab.term_to_id.get(term)
            if tid is None:
                vocab.term_to_id[term] = len(vocab.terms)
                vocab.terms.append(term)
                vocab.df.append(1)
            else:
                vocab.df[tid] += 1
    if n_docs == 0:
        raise ValueError("corpus is empty")
    return vocab


def weigh_document(
    doc: DocumentRecord,
    vocab: Vocabulary,
    corpus_size: int,
    mode: str = "standard",
) -> WeightedDoc:
    """Signed tf-idf weights for one document.

    Every distinct token must already be in the vocabulary.
    """
    if mode not in MODES:
        raise ValueError(f"unknown weighting mode: {mode!r}")
    tf = Counter(tokenize(doc.text))
    raw: Dict[int, float] = {}
    for term, count in tf.items():
        tid = vocab.id_for(term)
        if tid is None:
            raise ValueError(f"term {term!r} of document {doc.id!r} not in vocabulary")
        raw[tid] = (1.0 + math.log(count)) * math.log(
            (1.0 + corpus_size) / (1.0 + vocab.df[tid])
        )
    max_raw = max(raw.values(), default=0.0)
    weights: Dict[int, Tuple[float, float]] = {}
    for tid, value in raw.items():
        w_plus = value / max_raw if max_raw > 0.0 else 0.0
        w_minus = 1.0 - w_plus if mode == "complement" else 0.0
        weights[tid] = (w_plus, w_minus)
    return WeightedDoc(doc_id=doc.id, weights=weights)


def weights_to_hypernumber(
    weights: Mapping[int, Tuple[float, float]], n_terms: int
) -> HyperNumber:
    """Embed a signed weight map into the 2N-dimensional algebra.

    Term i carries w_plus on basis 2i+1 and w_minus on basis 2i+2
    (1-based), i.e. one split-complex block per term.
    """
    if n_terms < 1:
        raise ValueError("n_terms must be >= 1")
    coeffs: Dict[int, float] = {}
    for tid, (w_plus, w_minus) in weights.items():
        if not (0 <= tid < n_terms):
            raise ValueError(f"term id {tid} out of range [0, {n_terms})")
        if w_plus != 0.0:
            coeffs[2 * tid + 1] = w_plus
        if w_minus != 0.0:
            coeffs[2 * tid + 2] = w_minus
    return HyperNumber(2 * n_terms, coeffs)


def to_hypernumber(wd: WeightedDoc, vocab: Vocabulary) -> HyperNumber:
    """Document as an element of the algebra over the full vocabulary."""
    return weights_to_hypernumber(wd.weights, vocab.size)


def read_corpus(path: str) -> List[DocumentRecord]:
    """Parse a newline-delimited corpus file: one {"id", "text"} object per line.

    Reports malformed records with their line number; blank lines are
    skipped; duplicate ids and empty files are errors.
    """
    records: List[DocumentRecord] = []
    seen: set[str] = set()
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ValueError(f"{path}:{lineno}: invalid JSON: {exc}") from exc
            if not isinstance(obj, dict) or not isinstance(obj.get("id"), str) \
                    or not isinstance(obj.get("text"), str):
                raise ValueError(
                    f"{path}:{lineno}: record must be an object with string "
                    f"'id' and 'text' fields"
                )
            if not obj["id"]:
                raise ValueError(f"{path}:{lineno}: empty document id")
            if obj["id"] in seen:
                raise ValueError(f"{path}:{lineno}: duplicate document id {obj['id']!r}")
            seen.add(obj["id"])
            records.append(DocumentRecord(id=obj["id"], text=obj["text"]))
    if not records:
        raise ValueError(f"{path}: corpus file contains no records")
    return records
