from pathlib import Path
from typing import Generator

import pytest

from bvkit.cli._fixtures import FIXTURES_DIR
from bvkit.prover import ProofSearch
from bvkit.structure import Structure, parse
from bvkit.virtual import SessionContainer


@pytest.fixture
def config_path() -> Path:
    return Path(__file__).parent / "data"


@pytest.fixture
def fixtures_path() -> Path:
    return FIXTURES_DIR


@pytest.fixture
def s0() -> Structure:
    return parse("[<[a,b];c>,<~a;[~b,~c]>]")


@pytest.fixture(scope="function")
def search() -> ProofSearch:
    return ProofSearch(budget=200_000)


@pytest.fixture(scope="function")
def session() -> Generator[SessionContainer, None, None]:
    container = SessionContainer()

    yield container
