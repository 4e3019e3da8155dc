"""Command-line interface."""

from bvkit.cli._fixtures import FixtureOutcome, FixtureRunner
from bvkit.cli._main import build_parser, main, read_structure, run

__all__ = ["FixtureOutcome", "FixtureRunner", "build_parser", "main", "read_structure", "run"]
