import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def cache_dir(tmp_path, monkeypatch):
    monkeypatch.delenv("HILBSYM_CACHE_DIR", raising=False)
    return tmp_path / "cache"
