"""Shared fixtures: one memoized engine for the whole session.

The engine's memo tables are isomorphism-keyed, so every test that asks for
an exact polynomial benefits from work done by earlier tests.
"""

import pytest

from forestbuilder.engine import PolynomialEngine
from forestbuilder.search import enumerate_connected_graphs


@pytest.fixture(scope="session")
def engine():
    return PolynomialEngine()


@pytest.fixture(scope="session")
def connected_classes():
    """Connected isomorphism class representatives keyed by vertex count."""
    return {n: tuple(enumerate_connected_graphs(n)) for n in range(2, 7)}
