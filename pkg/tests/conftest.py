import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from trackpaths.graph import Graph, Instance  # noqa: E402


def make(n, edges, s=0, t=1, k=0):
    return Instance(Graph(n, edges), s, t, k)


# C4 s-a-t-b-s with s=0, t=1, a=2, b=3
def c4(k=0):
    return make(4, [(0, 2), (2, 1), (1, 3), (3, 0)], k=k)


@pytest.fixture
def square():
    return c4()


@st.composite
def small_instances(draw, min_n=2, max_n=7, connected=False):
    """Random simple graphs with two distinct terminals."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    if connected:
        order = draw(st.permutations(range(n)))
        for i in range(1, n):
            j = draw(st.integers(0, i - 1))
            e = tuple(sorted((order[i], order[j])))
            if e not in edges:
                edges.append(e)
    s = draw(st.integers(0, n - 1))
    t = draw(st.integers(0, n - 1).filter(lambda x: x != s))
    return make(n, edges, s, t)
