import logging
from pathlib import Path

import pytest

from modrep.client import ModRep
from modrep.config import Config
from modrep.data_model import *
from modrep.reptable import builtin_table, get_entry

logger = logging.getLogger(__name__)


@pytest.fixture(autouse=True)
def isolated_env(monkeypatch, tmp_path):
    """
    Keep a local ``~/.modrep/config.yml`` or ``MODREP_*`` variables from leaking into tests.
    """
    monkeypatch.setenv(Config.CONFIG_PATH_KEY, str(tmp_path / "no-such-config.yml"))
    monkeypatch.delenv(Config.WORKERS_KEY, raising=False)
    monkeypatch.delenv(Config.TABLE_KEY, raising=False)


@pytest.fixture()
def config() -> Config:
    return Config()


@pytest.fixture()
def client(config: Config) -> ModRep:
    return ModRep(config)


@pytest.fixture()
def table() -> list:
    return builtin_table()


@pytest.fixture()
def entry_12_11(table) -> TableEntry:
    return get_entry(table, 12, 11)


@pytest.fixture()
def entry_12_13(table) -> TableEntry:
    return get_entry(table, 12, 13)


@pytest.fixture()
def table_path(tmp_path: Path) -> Path:
    from modrep.reptable import serialize_table

    path = tmp_path / "table.txt"
    path.write_text(serialize_table(builtin_table()))
    return path
