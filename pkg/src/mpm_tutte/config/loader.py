"""Load settings from the packaged defaults and an optional YAML override."""

from __future__ import annotations

import importlib.resources
import logging
import os
from dataclasses import fields
from pathlib import Path
from typing import Any

import yaml

from mpm_tutte.errors import SettingsError
from mpm_tutte.models import BenchSettings, CorpusSettings, GuardSettings, Settings

logger = logging.getLogger(__name__)

ENV_VAR = "MPM_TUTTE_SETTINGS"

_SECTIONS: dict[str, type] = {
    "guards": GuardSettings,
    "bench": BenchSettings,
    "corpus": CorpusSettings,
}

_cache: dict[str, Settings] = {}


def get_settings(path: Path | None = None) -> Settings:
    """Return the active settings, loading them on first use.

    Passing ``path`` reloads from that override file and makes the result active.
    """
    if path is None and "active" in _cache:
        return _cache["active"]
    settings = load_settings(path)
    _cache["active"] = settings
    return settings


def clear_settings_cache() -> None:
    """Forget the active settings (primarily for tests)."""
    _cache.clear()


def load_settings(path: Path | None = None) -> Settings:
    """Load packaged defaults, then merge ``path`` or $MPM_TUTTE_SETTINGS over them.

    Raises:
        SettingsError: If a file cannot be read, is not a mapping, or names unknown keys.
    """
    data = _load_defaults()
    override = path if path is not None else _env_override()
    if override is not None:
        logger.debug("Merging settings override from %s", override)
        data = _merge(data, _load_from_file(override), source=str(override))
    return _build(data)


def _env_override() -> Path | None:
    value = os.environ.get(ENV_VAR, "").strip()
    return Path(value) if value else None


def _load_defaults() -> dict[str, Any]:
    try:
        ref = importlib.resources.files("mpm_tutte.config") / "defaults.yaml"
        return _parse_yaml(ref.read_text(encoding="utf-8"), source="builtin:defaults")
    except SettingsError:
        raise
    except Exception as exc:
        raise SettingsError(f"Failed to load packaged settings: {exc}") from exc


def _load_from_file(path: Path) -> dict[str, Any]:
    if not path.exists():
        raise SettingsError(f"Settings file not found: {path}")
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise SettingsError(f"Failed to read settings file '{path}': {exc}") from exc
    return _parse_yaml(text, source=str(path))


def _parse_yaml(text: str, source: str) -> dict[str, Any]:
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise SettingsError(f"Invalid YAML in {source}: {exc}") from exc
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise SettingsError(f"Invalid settings format in {source}: expected a YAML mapping.")
    return data


def _merge(base: dict[str, Any], override: dict[str, Any], source: str) -> dict[str, Any]:
    merged = {name: dict(section) for name, section in base.items()}
    for name, section in override.items():
        if name not in _SECTIONS:
            raise SettingsError(f"Unknown settings section '{name}' in {source}.")
        if not isinstance(section, dict):
            raise SettingsError(f"Settings section '{name}' in {source} must be a mapping.")
        merged.setdefault(name, {}).update(section)
    return merged


def _build(data: dict[str, Any]) -> Settings:
    sections: dict[str, Any] = {}
    for name, cls in _SECTIONS.items():
        raw = data.get(name, {})
        known = {f.name: f for f in fields(cls)}
        unknown = sorted(set(raw) - set(known))
        if unknown:
            raise SettingsError(f"Unknown keys in settings section '{name}': {unknown}.")
        values: dict[str, Any] = {}
        for key, value in raw.items():
            if isinstance(value, list):
                value = tuple(value)
            values[key] = value
        try:
            sections[name] = cls(**values)
        except TypeError as exc:
            raise SettingsError(f"Invalid settings section '{name}': {exc}") from exc
    return Settings(**sections)
