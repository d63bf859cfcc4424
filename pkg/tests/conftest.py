from __future__ import annotations

import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

import fixtures  # noqa: E402

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")


@pytest.fixture
def diamond():
    return fixtures.diamond()


@pytest.fixture
def zigzag():
    return fixtures.zigzag()


@pytest.fixture
def bipartite():
    return fixtures.matching_network()


@pytest.fixture(scope="session")
def corpus():
    nets = fixtures.corpus()
    assert len(nets) >= 200
    return nets
