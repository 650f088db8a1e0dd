import json

import pytest

from mccool.algebra import FULL, PLUS, compute_graded_basis, presentation
from mccool.cache import BasisCache, CorruptCacheEntry, basis_from_json, basis_to_json, clear_memory, get_basis


def test_roundtrip():
    b = compute_graded_basis(presentation(3, FULL))
    back = basis_from_json(json.loads(json.dumps(basis_to_json(b))))
    assert back.dims() == b.dims()
    for q in range(len(b.pieces)):
        assert back.basis(q) == b.basis(q)
        assert back.pieces[q].projection == b.pieces[q].projection


def test_tampered_entries_rejected():
    obj = basis_to_json(compute_graded_basis(presentation(3, PLUS)))
    bad = json.loads(json.dumps(obj))
    bad["dims"][1] = 4
    with pytest.raises(CorruptCacheEntry):
        basis_from_json(bad)
    bad = json.loads(json.dumps(obj))
    bad["degrees"][2]["basis"].pop()
    with pytest.raises(CorruptCacheEntry):
        basis_from_json(bad)
    bad = dict(obj, code_version="0.0.0")
    with pytest.raises(CorruptCacheEntry):
        basis_from_json(bad)


def test_list_and_evict_on_empty(tmp_path):
    c = BasisCache(tmp_path / "none")
    assert c.list() == []
    assert c.evict(3, FULL) is False


def test_rebuild_and_list(tmp_path):
    c = BasisCache(tmp_path)
    b = c.rebuild(4, FULL)
    assert b.dims() == [1, 12, 48, 64]
    entries = c.list()
    assert len(entries) == 1 and entries[0]["dims"] == [1, 12, 48, 64]
    assert c.evict(4, FULL) is True and c.list() == []


def test_corrupt_file_is_evicted(tmp_path):
    c = BasisCache(tmp_path)
    c.store(compute_graded_basis(presentation(3, FULL)))
    p = c.path(3, FULL)
    p.write_text("{not json")
    assert c.load(3, FULL) is None
    assert not p.exists()


def test_cache_hit_matches_cold(tmp_path):
    clear_memory()
    cold = get_basis(4, PLUS, tmp_path)
    clear_memory()
    warm = get_basis(4, PLUS, tmp_path)
    assert warm is not cold
    assert json.dumps(basis_to_json(warm)) == json.dumps(basis_to_json(cold))


def test_memory_hit_still_populates_directory(tmp_path):
    get_basis(3, PLUS)
    get_basis(3, PLUS, tmp_path)
    assert BasisCache(tmp_path).path(3, PLUS).exists()
