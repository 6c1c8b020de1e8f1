"""Command-line front end."""

from __future__ import annotations

from mpm_tutte.cli.commands import run_command

__all__ = ["run_command"]
