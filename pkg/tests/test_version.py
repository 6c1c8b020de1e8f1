"""Tests for runtime package version resolution."""

from __future__ import annotations

from importlib.metadata import PackageNotFoundError
from importlib.metadata import version as distribution_version

import pytest

import mpm_tutte


class TestRuntimeVersion:
    """Version resolution should reflect installed package metadata."""

    def test_module_version_matches_installed_distribution(self) -> None:
        assert mpm_tutte.__version__ == distribution_version("mpm-tutte")

    def test_fallback_when_metadata_missing(self, monkeypatch: pytest.MonkeyPatch) -> None:
        def _raise_package_not_found(_: str) -> str:
            raise PackageNotFoundError

        monkeypatch.setattr(mpm_tutte, "_distribution_version", _raise_package_not_found)

        assert mpm_tutte._resolve_version() == mpm_tutte._LOCAL_VERSION_FALLBACK
