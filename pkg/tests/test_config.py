import json
import logging

import pytest
from pydantic import ValidationError

from utils import AuditSettings, load_settings, setup_logging


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ("GROUP_AUDIT_MAX_COSETS", "GROUP_AUDIT_MAX_ORDER", "GROUP_AUDIT_TIMEOUT_SECS", "GROUP_AUDIT_JOBS"):
        monkeypatch.delenv(name, raising=False)


def test_defaults_without_config_file():
    settings = load_settings(None)
    assert settings == AuditSettings()
    assert settings.max_cosets == 65536
    assert settings.corpus_caps == {2: 64, 3: 243, 5: 625}


def test_shipped_config_matches_defaults():
    assert load_settings("configs/config.json") == AuditSettings()


def test_config_file_then_env_then_overrides(tmp_path, monkeypatch):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"max_order": 256, "jobs": 2, "corpus_caps": {"2": 32}}))
    monkeypatch.setenv("GROUP_AUDIT_JOBS", "3")
    monkeypatch.setenv("GROUP_AUDIT_TIMEOUT_SECS", "2.5")
    settings = load_settings(str(path), max_order=128, max_cosets=None)
    assert settings.max_order == 128
    assert settings.jobs == 3
    assert settings.timeout_secs == 2.5
    assert settings.max_cosets == 65536
    assert settings.corpus_caps == {2: 32}


def test_invalid_values_are_rejected(monkeypatch):
    with pytest.raises(ValidationError):
        AuditSettings(corpus_caps={7: 49})
    monkeypatch.setenv("GROUP_AUDIT_MAX_COSETS", "0")
    with pytest.raises(ValidationError):
        load_settings(None)


def test_setup_logging_installs_one_handler(monkeypatch):
    root = logging.getLogger()
    monkeypatch.setattr(root, "handlers", [])
    monkeypatch.setattr(root, "level", root.level)
    setup_logging()
    setup_logging(logging.DEBUG)
    assert len(root.handlers) == 1
    assert root.level == logging.DEBUG
    assert logging.getLogger("utils.utils").handlers == []
