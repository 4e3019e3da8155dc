"""Acceptance fixtures: command lines with their expected exit code."""

from __future__ import annotations

import contextlib
import io
import shlex
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from importlib.resources import files
from pathlib import Path
from typing import Any

import yaml

from bvkit.log import Loggable
from bvkit.virtual import ConfigError

__all__ = ["FIXTURES_DIR", "FixtureOutcome", "FixtureRunner"]

FIXTURES_DIR = Path(str(files("bvkit.cli") / "fixtures"))

#: Placeholder substituted with the fixture directory in manifest arguments.
PLACEHOLDER = "{fixtures}"


@dataclass(frozen=True)
class FixtureOutcome:
    name: str
    passed: bool
    code: int
    expected: int
    stdout: str = ""


class FixtureRunner(Loggable):
    """Run every entry of a fixture manifest through a CLI entry point.

    A manifest is a YAML mapping with a ``fixtures`` list; each entry has
    a ``name``, an ``argv`` (list or shell string), the expected ``exit``
    code and optionally a ``stdout`` substring.

    Parameters
    ----------
    manifest : ``str | Path | None``
        Manifest file; the packaged ``acceptance.yaml`` when ``None``.
    runner : ``Callable[[Sequence[str]], int]``
        Entry point returning an exit code.
    """

    def __init__(self, manifest: str | Path | None, runner: Callable[[Sequence[str]], int]) -> None:
        self.manifest = Path(manifest) if manifest else FIXTURES_DIR / "acceptance.yaml"
        self.runner = runner

    def entries(self) -> list[dict[str, Any]]:
        with open(self.manifest, encoding="utf-8") as f:
            data = yaml.safe_load(f)
        if not isinstance(data, dict) or not isinstance(data.get("fixtures"), list):
            raise ConfigError(f"{self.manifest}: expected a 'fixtures' list")
        for entry in data["fixtures"]:
            if not isinstance(entry, dict) or not {"name", "argv", "exit"} <= entry.keys():
                raise ConfigError(f"{self.manifest}: fixture entries need name, argv and exit")
        return list(data["fixtures"])

    def _argv(self, raw: str | list[Any]) -> list[str]:
        args = shlex.split(raw) if isinstance(raw, str) else [str(a) for a in raw]
        root = str(self.manifest.parent)
        return [a.replace(PLACEHOLDER, root) for a in args]

    def run_one(self, entry: dict[str, Any]) -> FixtureOutcome:
        argv = self._argv(entry["argv"])
        buffer = io.StringIO()
        with contextlib.redirect_stdout(buffer):
            code = self.runner(argv)
        out = buffer.getvalue()
        expected = int(entry["exit"])
        passed = code == expected and str(entry.get("stdout", "")) in out
        if passed:
            self.logger.debug(f"{entry['name']}: exit {code}")
        else:
            self.logger.warning(f"{entry['name']}: exit {code}, expected {expected}")
        return FixtureOutcome(entry["name"], passed, code, expected, out)

    def run(self) -> list[FixtureOutcome]:
        return [self.run_one(entry) for entry in self.entries()]
