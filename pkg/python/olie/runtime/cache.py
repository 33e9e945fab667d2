import importlib
import json
import os
import random
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Dict, Optional

from filelock import FileLock


def default_cache_dir():
    return os.path.join(Path.home(), ".olie", "cache")


class CacheManager(ABC):

    def __init__(self, key):
        pass

    @abstractmethod
    def get_file(self, filename) -> Optional[str]:
        pass

    @abstractmethod
    def put(self, data, filename, binary=True) -> str:
        pass

    @abstractmethod
    def get_json(self, filename: str) -> Optional[Dict]:
        pass

    @abstractmethod
    def put_json(self, filename: str, data: Dict) -> str:
        pass


class FileCacheManager(CacheManager):
    """One directory per key under ``OLIE_CACHE_DIR`` (default ``~/.olie/cache``)."""

    def __init__(self, key):
        self.key = key
        self.cache_dir = os.getenv("OLIE_CACHE_DIR", "").strip() or default_cache_dir()
        if not self.cache_dir:
            raise RuntimeError("Could not create or locate cache dir")
        self.cache_dir = os.path.join(self.cache_dir, self.key)
        self.lock_path = os.path.join(self.cache_dir, "lock")
        os.makedirs(self.cache_dir, exist_ok=True)

    def _make_path(self, filename) -> str:
        return os.path.join(self.cache_dir, filename)

    def has_file(self, filename) -> bool:
        return os.path.exists(self._make_path(filename))

    def get_file(self, filename) -> Optional[str]:
        if self.has_file(filename):
            return self._make_path(filename)
        return None

    def get_json(self, filename: str) -> Optional[Dict]:
        path = self.get_file(filename)
        if path is None:
            return None
        try:
            with open(path) as f:
                return json.load(f)
        except (OSError, ValueError):
            # unreadable entries count as misses
            return None

    def put_json(self, filename: str, data: Dict) -> str:
        return self.put(json.dumps(data, sort_keys=True, indent=2), filename, binary=False)

    def put(self, data, filename, binary=True) -> str:
        binary = isinstance(data, bytes)
        if not binary:
            data = str(data)
        filepath = self._make_path(filename)
        rnd_id = random.randint(0, 1000000)
        pid = os.getpid()
        # write to a temporary file first so readers never see a partial report
        temp_path = f"{filepath}.tmp.pid_{pid}_{rnd_id}"
        mode = "wb" if binary else "w"
        with FileLock(self.lock_path):
            with open(temp_path, mode) as f:
                f.write(data)
            os.replace(temp_path, filepath)
        return filepath


__cache_cls = FileCacheManager
__cache_cls_nme = "DEFAULT"


def get_cache_manager(key) -> CacheManager:
    user_cache_manager = os.environ.get("OLIE_CACHE_MANAGER", None)
    global __cache_cls
    global __cache_cls_nme

    if user_cache_manager is not None and user_cache_manager != __cache_cls_nme:
        module_path, clz_nme = user_cache_manager.split(":")
        module = importlib.import_module(module_path)
        __cache_cls = getattr(module, clz_nme)
        __cache_cls_nme = user_cache_manager

    return __cache_cls(key)
