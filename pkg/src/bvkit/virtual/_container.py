from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, TypeAlias

import dependency_injector.containers as dic
import dependency_injector.providers as dip
from psygnal import Signal, SignalInstance

from bvkit.log import Loggable
from bvkit.prover import ProofSearch
from bvkit.virtual._config import DEFAULT_CONFIG, BVConfig

__all__ = ["Signal", "SignalCache", "SessionContainer"]

SignalCache: TypeAlias = dict[str, SignalInstance]
"""Cache type for storing signal instances registered from component classes."""


@dataclass(frozen=True, kw_only=True)
class _FrozenConfig:
    """Frozen configuration dataclass."""

    schema_version: float
    budget: int
    progress_every: int
    session: str
    metadata: dict[str, object]


class SessionContainer(dic.DynamicContainer, Loggable):
    """Configured factory of provers and registry of their signals.

    `SessionContainer` is a [`DynamicContainer`][dependency_injector.containers.DynamicContainer]
    holding the session configuration; `prover` builds `ProofSearch`
    instances bound to the configured budget.
    """

    def __init__(self, config: BVConfig | None = None) -> None:
        super().__init__()
        self._signals = dip.Factory(dict[str, SignalCache])
        self._config = dip.Singleton(_FrozenConfig)
        self._set_configuration(config or DEFAULT_CONFIG)
        self.prover = dip.Factory(
            ProofSearch,
            budget=dip.Callable(lambda: self.budget),
            progress_every=dip.Callable(lambda: self._config().progress_every),
        )

    @property
    def name(self) -> str:
        return self.session

    @property
    def schema_version(self) -> float:
        """The schema version specified in the configuration."""
        return self._config().schema_version

    @property
    def budget(self) -> int:
        """The proof search budget specified in the configuration."""
        return self._config().budget

    @property
    def session(self) -> str:
        """The session display name specified in the configuration."""
        return self._config().session

    @property
    def metadata(self) -> dict[str, object]:
        """The session metadata specified in the configuration."""
        return self._config().metadata

    def _set_configuration(self, config: BVConfig) -> None:
        """Set the session configuration.

        Parameters
        ----------
        config : BVConfig
            The configuration to set.
        """
        self._config.set_kwargs(
            schema_version=config["schema_version"],
            budget=config.get("budget", 10**6),
            progress_every=config.get("progress_every", 10**4),
            session=config.get("session", "bvkit"),
            metadata=config.get("metadata", {}),
        )
        self._config.reset()

    def override_budget(self, budget: int) -> None:
        """Replace the configured budget, e.g. with a command-line value."""
        current = self._config()
        self._config.set_kwargs(
            schema_version=current.schema_version,
            budget=budget,
            progress_every=current.progress_every,
            session=current.session,
            metadata=current.metadata,
        )
        self._config.reset()

    def register_signals(
        self, owner: object, name: str | None = None, only: Iterable[str] | None = None
    ) -> None:
        """Register the signals of an object in the container.

        Parameters
        ----------
        owner : object
            The instance whose class's signals are to be cached.
            Must provide a `name` attribute unless `name` is given.
        name : str | None
            An optional name to use as the key for caching the signals.
            If not provided, the `name` of `owner` will be used.
        only : Iterable[str], optional
            A list of signal names to cache. If not provided, all
            signals in the class will be cached automatically by inspecting
            the class attributes.
        """
        owner_class = type(owner)
        cache_entry = name if name is not None else getattr(owner, "name")

        if only is None:
            only = [
                attr
                for attr in dir(owner_class)
                if isinstance(getattr(owner_class, attr, None), Signal)
            ]

        batch: dict[str, SignalInstance] = {}
        for attr in only:
            signal_descriptor = getattr(owner_class, attr, None)
            if isinstance(signal_descriptor, Signal):
                batch[attr] = getattr(owner, attr)
        if batch:
            self._signals.add_kwargs(**{cache_entry: batch})
            self.logger.debug("registered signals %s of %s", sorted(batch), cache_entry)

    def new_prover(self, name: str = "prover") -> ProofSearch:
        """Build a `ProofSearch` from the configuration and register its signals."""
        search: ProofSearch = self.prover(name=name)
        self.register_signals(search)
        return search

    @property
    def signals(self) -> dict[str, SignalCache]:
        """The currently registered signals."""
        return self._signals()
