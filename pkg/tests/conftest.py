"""Shared fixtures: shipped configs and a builder for config documents."""
import copy
import json
from pathlib import Path

import pytest

from src.data_processing import load_config, parse_config

CONFIG_DIR = Path(__file__).resolve().parent.parent / "configs"

BASE_DOCUMENT = {
    "users": [
        {"id": "u1", "position": [1.0, 2.0, 1.0]},
        {"id": "u2", "position": [2.0, 2.0, 1.0]},
    ],
    "sweep": {"mobile_user": "u2", "axis": "y", "start": 2.0, "stop": 8.0, "step": 0.25},
}


def document(**overrides):
    """Minimal two-user document; every other field takes its default."""
    doc = copy.deepcopy(BASE_DOCUMENT)
    for key, value in overrides.items():
        doc[key] = value
    return doc


def build(**overrides):
    return parse_config(json.dumps(document(**overrides)))


@pytest.fixture
def config_dir():
    return CONFIG_DIR


@pytest.fixture
def noma_fair():
    return load_config(CONFIG_DIR / "noma_fair.json")


@pytest.fixture
def noma_equal():
    return load_config(CONFIG_DIR / "noma_equal.json")


@pytest.fixture
def wdm_fair():
    return load_config(CONFIG_DIR / "wdm_fair.json")


@pytest.fixture
def wdm_equal():
    return load_config(CONFIG_DIR / "wdm_equal.json")


@pytest.fixture
def write_config(tmp_path):
    """Write a document to a temp file and return its path."""
    def _write(doc, name="config.json"):
        path = tmp_path / name
        path.write_text(json.dumps(doc))
        return path
    return _write


@pytest.fixture
def reference_sic():
    """The four reference curves with perfect SIC at B = 100 Hz."""
    names = ("noma_fair", "noma_equal", "wdm_fair", "wdm_equal")
    return {name: load_config(CONFIG_DIR / f"{name}_sic.json") for name in names}
