"""Configuration: packaged YAML defaults with optional file override."""

from __future__ import annotations

from mpm_tutte.config.loader import clear_settings_cache, get_settings, load_settings

__all__ = ["clear_settings_cache", "get_settings", "load_settings"]
