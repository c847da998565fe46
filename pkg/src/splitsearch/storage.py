"""Index persistence: versioned, checksummed JSON with atomic writes.

The payload is serialized with sorted keys and compact separators, so
the same index always produces the same bytes; floats use Python's
shortest round-tripping representation, which restores them bit-equal.
The vocabulary is stored in id order, keeping term ids stable across a
save/load cycle.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from typing import Any, Dict

from .index import InvertedIndex, build_index
from .weighting import DocumentRecord, Vocabulary, WeightedDoc

FORMAT_NAME = "splitsearch-index"
FORMAT_VERSION = 1


class IndexStorageError(ValueError):
    """Unreadable or unusable index file."""


class IndexCorruptError(IndexStorageError):
    """File is damaged: bad JSON, missing fields, or checksum mismatch."""


class IndexVersionError(IndexStorageError):
    """File was written by an incompatible format version."""


def _canonical(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _payload(index: InvertedIndex) -> Dict[str, Any]:
    return {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "mode": index.mode,
        "vocabulary": {
            "terms": list(index.vocab.terms),
            "df": list(index.vocab.df),
        },
        "documents": [
            {"id": rec.id, "text": rec.text}
            for rec in sorted(index.doc_table.values(), key=lambda r: r.id)
        ],
        "doc_weights": {
            doc_id: {str(tid): [wp, wm] for tid, (wp, wm) in sorted(weights.items())}
            for doc_id, weights in sorted(index.doc_weights.items())
        },
    }


def save_index(index: InvertedIndex, path: str) -> None:
    """Write the index atomically (temp file in place, then rename)."""
    payload = _payload(index)
    body = _canonical(payload)
    checksum = hashlib.sha256(body.encode("utf-8")).hexdigest()
    document = _canonical({"checksum": checksum, "data": payload})
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".index-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(document)
            fh.write("\n")
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.unlink(tmp_path)
        raise


def load_index(path: str) -> InvertedIndex:
    """Read an index back; searches on the result score identically."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            document = json.load(fh)
    except json.JSONDecodeError as exc:
        raise IndexCorruptError(f"{path}: not a valid index file: {exc}") from exc
    if not isinstance(document, dict) or "data" not in document or "checksum" not in document:
        raise IndexCorruptError(f"{path}: missing checksum or data section")
    payload = document["data"]
    body = _canonical(payload)
    checksum = hashlib.sha256(body.encode("utf-8")).hexdigest()
    if checksum != document["checksum"]:
        raise IndexCorruptError(f"{path}: checksum mismatch, file is corrupt")
    if payload.get("format") != FORMAT_NAME:
        raise IndexCorruptError(f"{path}: unrecognized format {payload.get('format')!r}")
    if payload.get("version") != FORMAT_VERSION:
        raise IndexVersionError(
            f"{path}: format version {payload.get('version')!r} is not "
            f"supported (expected {FORMAT_VERSION})"
        )
    try:
        vocab = Vocabulary(
            terms=list(payload["vocabulary"]["terms"]),
            term_to_id={t: i for i, t in enumerate(payload["vocabulary"]["terms"])},
            df=list(payload["vocabulary"]["df"]),
        )
        records = {
            doc["id"]: DocumentRecord(id=doc["id"], text=doc["text"])
            for doc in payload["documents"]
        }
        docs = [
            WeightedDoc(
                doc_id=doc_id,
                weights={int(tid): (wp, wm) for tid, (wp, wm) in weights.items()},
            )
            for doc_id, weights in payload["doc_weights"].items()
        ]
    except (KeyError, TypeError, ValueError) as exc:
        raise IndexCorruptError(f"{path}: malformed index payload: {exc}") from exc
    return build_index(docs, vocab, payload["mode"], records=records)
