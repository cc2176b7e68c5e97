# tests/test_environment.py
import pytest

from environment import get_settings
from errors import ConfigError


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for key in ("SWR_MAX_THREADS", "SWR_LOG_LEVEL", "SWR_PATH_GUARD"):
        monkeypatch.delenv(key, raising=False)
    monkeypatch.setattr("environment.load_dotenv", lambda: None)


def test_defaults():
    settings = get_settings()
    assert (settings.max_threads, settings.log_level, settings.path_guard) == (4, "WARNING", 10)


def test_overrides(monkeypatch):
    monkeypatch.setenv("SWR_MAX_THREADS", "2")
    monkeypatch.setenv("SWR_LOG_LEVEL", "debug")
    monkeypatch.setenv("SWR_PATH_GUARD", "12")
    settings = get_settings()
    assert (settings.max_threads, settings.log_level, settings.path_guard) == (2, "DEBUG", 12)


@pytest.mark.parametrize("key, value", [("SWR_MAX_THREADS", "0"), ("SWR_PATH_GUARD", "many")])
def test_invalid_values(monkeypatch, key, value):
    monkeypatch.setenv(key, value)
    with pytest.raises(ConfigError):
        get_settings()
