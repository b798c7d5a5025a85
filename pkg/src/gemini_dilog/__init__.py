"""Gemini-function and dilogarithm identity toolkit."""

from . import analysis, catalog, cli, gemini, geometry, polylog  # noqa: F401

__version__ = "0.1.0"
