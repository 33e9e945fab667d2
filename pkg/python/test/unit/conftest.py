import pytest

from olie.algebra.order import MonomialOrder, OrderKind
from olie.algebra.words import DEFAULT_ALPHABET


@pytest.fixture
def dt():
    return MonomialOrder(OrderKind.DT, DEFAULT_ALPHABET)


@pytest.fixture
def dl():
    return MonomialOrder(OrderKind.DL, DEFAULT_ALPHABET)


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("OLIE_CACHE_DIR", str(tmp_path / "cache"))
    monkeypatch.delenv("OLIE_DEBUG", raising=False)
