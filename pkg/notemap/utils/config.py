"""
Configuration management for notemap

Settings come from a YAML document validated by pydantic. Lookup order is an
explicit path, then ``./notemap.yaml``, then the defaults packaged in
``notemap/data/config.yaml``. Environment variables override the file:
``NOTEMAP_LOG_LEVEL`` for the log level and ``NOTEMAP_<SECTION>__<FIELD>`` for
any other setting, e.g. ``NOTEMAP_MIDI__BEND_RANGE=1``.
"""

from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from ..core.errors import ConfigError
from ..core.models import SpellingPolicy

DATA_DIR = Path(__file__).resolve().parent.parent / 'data'
DEFAULT_CONFIG_FILE = DATA_DIR / 'config.yaml'
LOCAL_CONFIG_FILE = Path('notemap.yaml')


class CoreSettings(BaseModel):
    model_config = ConfigDict(extra='forbid')

    log_level: str = "WARNING"
    log_file: Optional[str] = None

    @field_validator('log_level')
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.upper()
        if level not in ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'):
            raise ValueError(f"unknown log level: {value}")
        return level


class SpellingSettings(BaseModel):
    model_config = ConfigDict(extra='forbid')

    policy: SpellingPolicy = SpellingPolicy.SHARPS


class MidiSettings(BaseModel):
    """Rendering constants for Standard MIDI File export"""

    model_config = ConfigDict(extra='forbid')

    ticks_per_quarter: int = Field(default=480, gt=0, lt=0x8000)
    chord_ticks: int = Field(default=480, gt=0)
    velocity: int = Field(default=80, ge=1, le=127)
    base_key: int = Field(default=60, ge=0, le=127)
    bend_range: int = Field(default=2, ge=1, le=24)


class HarnessSettings(BaseModel):
    model_config = ConfigDict(extra='forbid')

    claims_file: Path = DATA_DIR / 'claims.yaml'
    errata_file: Path = DATA_DIR / 'known_errata.yaml'
    parallel: bool = True


class NotemapConfig(BaseSettings):
    """Top-level configuration document; the environment wins over the YAML file"""

    model_config = SettingsConfigDict(env_prefix='NOTEMAP_', env_nested_delimiter='__', extra='forbid')

    core: CoreSettings = Field(default_factory=CoreSettings)
    spelling: SpellingSettings = Field(default_factory=SpellingSettings)
    midi: MidiSettings = Field(default_factory=MidiSettings)
    harness: HarnessSettings = Field(default_factory=HarnessSettings)

    # NOTEMAP_LOG_LEVEL, folded into core.log_level
    log_level: Optional[str] = Field(default=None, exclude=True)

    @classmethod
    def settings_customise_sources(cls, settings_cls, init_settings, env_settings,
                                   dotenv_settings, file_secret_settings):
        return env_settings, init_settings

    @model_validator(mode='after')
    def _apply_log_level(self) -> 'NotemapConfig':
        if self.log_level is not None:
            self.core = CoreSettings(log_level=self.log_level, log_file=self.core.log_file)
        return self


def _read_yaml(path: Path) -> Dict[str, Any]:
    with open(path, 'r', encoding='utf-8') as f:
        data = yaml.safe_load(f)
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigError(f"Configuration file {path} must contain a mapping")
    section = data.get('notemap', data) or {}
    if not isinstance(section, dict):
        raise ConfigError(f"Configuration file {path} must contain a mapping under 'notemap'")
    return section


def load_config(path: Optional[Union[str, Path]] = None) -> NotemapConfig:
    """Load and validate configuration"""
    if path is not None:
        config_path = Path(path)
        if not config_path.exists():
            raise ConfigError(f"Configuration file not found: {config_path}")
    elif LOCAL_CONFIG_FILE.exists():
        config_path = LOCAL_CONFIG_FILE
    else:
        config_path = DEFAULT_CONFIG_FILE

    data = _read_yaml(config_path)

    try:
        return NotemapConfig(**{str(key): value for key, value in data.items()})
    except ValidationError as e:
        raise ConfigError(f"Invalid configuration in {config_path}: {e}") from e
