"""
Tests for configuration loading and logging setup
"""

import logging

import pytest

from notemap.core.errors import ConfigError
from notemap.core.models import SpellingPolicy
from notemap.utils.config import DATA_DIR, load_config
from notemap.utils.logger import get_logger, setup_logger


class TestLoadConfig:
    """Test configuration lookup and validation"""

    def test_packaged_defaults(self, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        monkeypatch.delenv('NOTEMAP_LOG_LEVEL', raising=False)
        config = load_config()
        assert config.core.log_level == "WARNING"
        assert config.spelling.policy == SpellingPolicy.SHARPS
        assert config.midi.ticks_per_quarter == 480
        assert config.midi.bend_range == 2
        assert config.harness.claims_file == DATA_DIR / 'claims.yaml'

    def test_local_file(self, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        (tmp_path / 'notemap.yaml').write_text("notemap:\n  midi:\n    velocity: 100\n", encoding='utf-8')
        assert load_config().midi.velocity == 100

    def test_explicit_file_without_section(self, tmp_path):
        path = tmp_path / 'custom.yaml'
        path.write_text("spelling:\n  policy: flats\n", encoding='utf-8')
        assert load_config(path).spelling.policy == SpellingPolicy.FLATS

    def test_empty_file(self, tmp_path):
        path = tmp_path / 'empty.yaml'
        path.write_text("", encoding='utf-8')
        assert load_config(path).midi.base_key == 60

    def test_env_log_level(self, tmp_path, monkeypatch):
        monkeypatch.setenv('NOTEMAP_LOG_LEVEL', 'debug')
        path = tmp_path / 'empty.yaml'
        path.write_text("", encoding='utf-8')
        assert load_config(path).core.log_level == "DEBUG"

    def test_env_beats_yaml_log_level(self, tmp_path, monkeypatch):
        monkeypatch.setenv('NOTEMAP_LOG_LEVEL', 'error')
        path = tmp_path / 'levels.yaml'
        path.write_text("notemap:\n  core:\n    log_level: INFO\n", encoding='utf-8')
        assert load_config(path).core.log_level == "ERROR"

    def test_env_nested_override_merges(self, tmp_path, monkeypatch):
        monkeypatch.delenv('NOTEMAP_LOG_LEVEL', raising=False)
        monkeypatch.setenv('NOTEMAP_MIDI__VELOCITY', '90')
        path = tmp_path / 'midi.yaml'
        path.write_text("notemap:\n  midi:\n    velocity: 100\n    bend_range: 1\n", encoding='utf-8')
        config = load_config(path)
        assert config.midi.velocity == 90
        assert config.midi.bend_range == 1

    def test_env_invalid_level(self, tmp_path, monkeypatch):
        monkeypatch.setenv('NOTEMAP_LOG_LEVEL', 'loud')
        path = tmp_path / 'empty.yaml'
        path.write_text("", encoding='utf-8')
        with pytest.raises(ConfigError):
            load_config(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError):
            load_config(tmp_path / 'absent.yaml')

    @pytest.mark.parametrize("text", [
        "notemap:\n  core:\n    log_level: LOUD\n",
        "notemap:\n  midi:\n    bend_range: 0\n",
        "notemap:\n  midi:\n    velocity: 128\n",
        "notemap:\n  spelling:\n    policy: naturals\n",
        "notemap:\n  unknown: {}\n",
        "- a list\n",
    ])
    def test_invalid(self, tmp_path, text):
        path = tmp_path / 'bad.yaml'
        path.write_text(text, encoding='utf-8')
        with pytest.raises(ConfigError):
            load_config(path)


class TestLogger:
    """Test logger setup"""

    def test_namespaced(self):
        assert get_logger('cli').name == 'notemap.cli'
        assert get_logger('notemap.io.midi').name == 'notemap.io.midi'

    def test_setup_replaces_handlers(self, tmp_path):
        log_file = tmp_path / 'logs' / 'notemap.log'
        logger = setup_logger('INFO', str(log_file))
        setup_logger('DEBUG', str(log_file))
        assert len(logger.handlers) == 2
        assert logger.level == logging.DEBUG
        assert log_file.exists()
        setup_logger()
