import os

import pytest

from olie.runtime import cache
from olie.runtime.cache import FileCacheManager, get_cache_manager


def test_put_and_get_json(tmp_path):
    manager = FileCacheManager("abc")
    assert manager.cache_dir == os.path.join(str(tmp_path / "cache"), "abc")
    assert manager.get_json("report.json") is None
    path = manager.put_json("report.json", {"verdict": "GS-at-scale", "instances": 3})
    assert os.path.exists(path)
    assert manager.get_json("report.json") == {"verdict": "GS-at-scale", "instances": 3}
    assert not [name for name in os.listdir(manager.cache_dir) if ".tmp." in name]


def test_unreadable_entry_is_a_miss():
    manager = FileCacheManager("broken")
    manager.put("{not json", "report.json", binary=False)
    assert manager.get_json("report.json") is None


def test_binary_put():
    manager = FileCacheManager("bin")
    path = manager.put(b"\x00\x01", "blob")
    with open(path, "rb") as f:
        assert f.read() == b"\x00\x01"


class CountingCacheManager(FileCacheManager):
    created = 0

    def __init__(self, key):
        super().__init__(key)
        CountingCacheManager.created += 1


def test_cache_manager_override(monkeypatch):
    monkeypatch.setenv("OLIE_CACHE_MANAGER", f"{__name__}:CountingCacheManager")
    monkeypatch.setattr(cache, "__cache_cls", FileCacheManager)
    monkeypatch.setattr(cache, "__cache_cls_nme", "DEFAULT")
    before = CountingCacheManager.created
    manager = get_cache_manager("k")
    assert isinstance(manager, CountingCacheManager)
    assert CountingCacheManager.created == before + 1


def test_bad_cache_manager(monkeypatch):
    monkeypatch.setenv("OLIE_CACHE_MANAGER", "olie.runtime.cache:NoSuchManager")
    monkeypatch.setattr(cache, "__cache_cls", FileCacheManager)
    monkeypatch.setattr(cache, "__cache_cls_nme", "DEFAULT")
    with pytest.raises(AttributeError):
        get_cache_manager("k")
