# tests/test_config.py
import json

import pytest

from config import list_fixtures, load_config
from errors import ConfigError


@pytest.mark.anyio
async def test_registry_entries(repo_root):
    path = str(repo_root / "swr_config.json")
    fixture = await load_config(path, "A008277")
    assert fixture.specialization == "stirling2"
    assert (fixture.offset, fixture.first_row, fixture.first_col) == (1, 1, 1)
    assert await list_fixtures(path) == ["A008277", "A008279", "A049020", "A154602"]


@pytest.mark.anyio
async def test_unknown_sequence(repo_root):
    with pytest.raises(ConfigError):
        await load_config(str(repo_root / "swr_config.json"), "A000045")


@pytest.mark.anyio
async def test_bad_files(tmp_path):
    with pytest.raises(ConfigError):
        await load_config(str(tmp_path / "missing.json"), "A008277")

    broken = tmp_path / "broken.json"
    broken.write_text("{oeisFixtures")
    with pytest.raises(ConfigError):
        await load_config(str(broken), "A008277")

    invalid = tmp_path / "invalid.json"
    invalid.write_text(json.dumps({"oeisFixtures": {"A008277": {"bfile": "x.txt"}}}))
    with pytest.raises(ConfigError):
        await load_config(str(invalid), "A008277")
