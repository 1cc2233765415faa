"""
CLI configuration

Precedence: command-line flag > KNOTSIG_* environment > config.yaml > defaults
"""

import os
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from pydantic import BaseModel, Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from core.exceptions import ConfigError
from core.hermitian import Tolerances
LOG_LEVELS = ("TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL")


class Settings(BaseSettings):
    # Tolerances
    tol_zero: float = 1e-9
    tol_jump: float = 1e-6
    tol_root: float = 1e-8
    tol_det: float = 1e-12

    # Profile sampling
    resolution: int = 360

    # Catalog
    catalog_path: Optional[str] = None

    # Logging
    log_level: str = "WARNING"
    log_file: Optional[str] = None

    model_config = SettingsConfigDict(env_prefix="KNOTSIG_")


# settings field -> (section, key) in config.yaml
YAML_FIELDS = {
    "tol_zero": ("tolerances", "zero"),
    "tol_jump": ("tolerances", "jump"),
    "tol_root": ("tolerances", "root"),
    "tol_det": ("tolerances", "det"),
    "resolution": ("profile", "resolution"),
    "catalog_path": ("catalog", "path"),
    "log_level": ("logging", "level"),
    "log_file": ("logging", "file"),
}


def read_yaml_config(config_path: str) -> Dict[str, Any]:
    """
    Settings fields found in a config.yaml.

    A missing file gives {}; sections this tool does not read (app, ...) are
    ignored.

    Raises:
        ConfigError: the file is not YAML, or a section is not a mapping
    """
    path = Path(config_path)
    if not path.is_file():
        return {}
    try:
        with open(path, encoding="utf-8") as f:
            document = yaml.safe_load(f) or {}
    except (yaml.YAMLError, UnicodeDecodeError) as exc:
        raise ConfigError(f"{path}: {exc}") from exc
    if not isinstance(document, dict):
        raise ConfigError(f"{path}: expected a mapping of sections")

    values = {}
    for field_name, (section, key) in YAML_FIELDS.items():
        block = document.get(section)
        if block is None:
            continue
        if not isinstance(block, dict):
            raise ConfigError(f"{path}: section {section!r} must be a mapping")
        if block.get(key) is not None:
            values[field_name] = block[key]
    return values


def load_settings(config_path: Optional[str] = None) -> Settings:
    """Environment-backed settings with config.yaml filling the unset fields"""
    settings = Settings()
    config = read_yaml_config(config_path or os.getenv("KNOTSIG_CONFIG", "config.yaml"))
    update = {
        key: value for key, value in config.items()
        if key not in settings.model_fields_set
    }
    return Settings(**{**settings.model_dump(), **update})


@lru_cache()
def get_settings() -> Settings:
    return load_settings()


class CliConfig(BaseModel):
    """Validated configuration of one invocation"""
    tol_zero: float = Field(1e-9, gt=0)
    tol_jump: float = Field(1e-6, gt=0)
    tol_root: float = Field(1e-8, gt=0)
    tol_det: float = Field(1e-12, gt=0)
    resolution: int = Field(360, ge=4)
    catalog_path: Optional[str] = None
    output_path: Optional[str] = None
    log_level: str = "WARNING"
    log_file: Optional[str] = None

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        value = value.upper()
        if value not in LOG_LEVELS:
            raise ValueError(f"unknown log level {value!r}")
        return value

    @property
    def tolerances(self) -> Tolerances:
        return Tolerances(zero=self.tol_zero, det=self.tol_det)

    @classmethod
    def from_sources(cls, settings: Settings, overrides: Dict[str, Any]) -> "CliConfig":
        """Settings overlaid with the flags actually given"""
        values = settings.model_dump()
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)
