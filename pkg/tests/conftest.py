import pytest

from hamparity import MixedGraph


@pytest.fixture
def mixed3() -> MixedGraph:
    """Three vertices with one pair of each kind: {0,1} undirected,
    (0,2) directed, {1,2} non-edge.  Its only Hamilton path is (1, 0, 2)."""
    return MixedGraph(3, undirected=[(0, 1)], arcs=[(0, 2)])


@pytest.fixture
def cycle3() -> MixedGraph:
    """The cyclic tournament 0 -> 1 -> 2 -> 0; three Hamilton paths."""
    return MixedGraph(3, arcs=[(0, 1), (1, 2), (2, 0)])
