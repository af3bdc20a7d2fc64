"""Hypothesis strategies shared by the property tests."""

from hypothesis import strategies as st

from hamparity import MixedGraph


@st.composite
def mixed_graphs(draw, min_n: int = 1, max_n: int = 5) -> MixedGraph:
    n = draw(st.integers(min_n, max_n))
    und, arcs = [], []
    for i in range(n):
        for j in range(i + 1, n):
            code = draw(st.integers(0, 3))
            if code == 1:
                und.append((i, j))
            elif code == 2:
                arcs.append((i, j))
            elif code == 3:
                arcs.append((j, i))
    return MixedGraph(n, undirected=und, arcs=arcs)


@st.composite
def tournaments(draw, min_n: int = 2, max_n: int = 5) -> MixedGraph:
    n = draw(st.integers(min_n, max_n))
    arcs = []
    for i in range(n):
        for j in range(i + 1, n):
            arcs.append((i, j) if draw(st.booleans()) else (j, i))
    return MixedGraph(n, arcs=arcs)
