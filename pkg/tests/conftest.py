import sys
from pathlib import Path

import pytest

from mghdist import Graph, metric_from_graph

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture(scope="session")
def k3():
    return metric_from_graph(Graph(3, [(0, 1), (1, 2), (0, 2)]))


@pytest.fixture(scope="session")
def p3():
    return metric_from_graph(Graph(3, [(0, 1), (1, 2)]))


@pytest.fixture(scope="session")
def p2():
    return metric_from_graph(Graph(2, [(0, 1)]))


@pytest.fixture(scope="session")
def point():
    return metric_from_graph(Graph(1))
