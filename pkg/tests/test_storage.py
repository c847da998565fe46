"""Persistence round-trip and corruption handling tests."""

import json

import pytest

from splitsearch.index import index_corpus, run_query
from splitsearch.storage import (
    FORMAT_VERSION,
    IndexCorruptError,
    IndexVersionError,
    load_index,
    save_index,
)
from splitsearch.weighting import DocumentRecord


CORPUS = [
    DocumentRecord("d1", "alpha beta gamma"),
    DocumentRecord("d2", "beta delta"),
    DocumentRecord("d3", "gamma gamma epsilon"),
]


def test_round_trip_scores_identical(tmp_path):
    index = index_corpus(CORPUS)
    path = tmp_path / "idx.json"
    save_index(index, str(path))
    loaded = load_index(str(path))
    for query in ("alpha", "beta -gamma", "0.5:delta epsilon"):
        original, _ = run_query(index, query, k=10)
        reloaded, _ = run_query(loaded, query, k=10)
        assert [(h.doc_id, h.score) for h in original] == [
            (h.doc_id, h.score) for h in reloaded
        ]


def test_round_trip_preserves_structure(tmp_path):
    index = index_corpus(CORPUS, mode="complement")
    path = tmp_path / "idx.json"
    save_index(index, str(path))
    loaded = load_index(str(path))
    assert loaded.mode == "complement"
    assert loaded.vocab.terms == index.vocab.terms
    assert loaded.vocab.df == index.vocab.df
    assert loaded.postings == index.postings
    assert loaded.doc_table == index.doc_table


def test_save_is_deterministic(tmp_path):
    index = index_corpus(CORPUS)
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    save_index(index, str(p1))
    save_index(index_corpus(CORPUS), str(p2))
    assert p1.read_bytes() == p2.read_bytes()


def test_save_load_save_byte_identical(tmp_path):
    index = index_corpus(CORPUS)
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    save_index(index, str(p1))
    save_index(load_index(str(p1)), str(p2))
    assert p1.read_bytes() == p2.read_bytes()


def test_truncated_file_is_corrupt(tmp_path):
    index = index_corpus(CORPUS)
    path = tmp_path / "idx.json"
    save_index(index, str(path))
    data = path.read_bytes()
    path.write_bytes(data[: len(data) // 2])
    with pytest.raises(IndexCorruptError):
        load_index(str(path))


def test_flipped_payload_fails_checksum(tmp_path):
    index = index_corpus(CORPUS)
    path = tmp_path / "idx.json"
    save_index(index, str(path))
    doc = json.loads(path.read_text())
    doc["data"]["mode"] = "complement"
    path.write_text(json.dumps(doc))
    with pytest.raises(IndexCorruptError, match="checksum"):
        load_index(str(path))


def test_future_version_rejected(tmp_path):
    index = index_corpus(CORPUS)
    path = tmp_path / "idx.json"
    save_index(index, str(path))
    doc = json.loads(path.read_text())
    doc["data"]["version"] = FORMAT_VERSION + 1
    body = json.dumps(doc["data"], sort_keys=True, separators=(",", ":"))
    import hashlib

    doc["checksum"] = hashlib.sha256(body.encode()).hexdigest()
    path.write_text(json.dumps(doc))
    with pytest.raises(IndexVersionError):
        load_index(str(path))


def test_missing_file(tmp_path):
    with pytest.raises(OSError):
        load_index(str(tmp_path / "nope.json"))
