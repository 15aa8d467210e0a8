"""CLI module for prym commands."""

from prymcalc.cli.main import app

__all__ = ["app"]
