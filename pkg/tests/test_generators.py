import pytest

from trackpaths.generators import (GenSpec, gen_flower, gen_path, gen_random_connected, gen_theta,
                                   gen_tree_sink)
from trackpaths.graph import GraphError, max_vertex_disjoint_paths
from trackpaths.oracle import enumerate_st_paths


@pytest.mark.parametrize("p", range(1, 7))
def test_theta_has_p_disjoint_paths(p):
    inst = gen_theta(p, 3)
    assert max_vertex_disjoint_paths(inst.graph, inst.s, inst.t) == p
    assert inst.graph.num_vertices() == 2 + 2 * p


def test_path():
    inst = gen_path(4)
    assert enumerate_st_paths(inst) == [(0, 1, 2, 3, 4)]


@pytest.mark.parametrize("leaves", [2, 3, 4, 5])
@pytest.mark.parametrize("sink_is_t", [True, False])
def test_tree_sink_shape(leaves, sink_is_t):
    inst = gen_tree_sink(leaves, sink_is_t)
    n = inst.graph.num_vertices()
    assert n == 2 * leaves + (0 if sink_is_t else 1)
    assert inst.graph.connected(inst.s, inst.t)


def test_flower_shape():
    inst = gen_flower(3, 2)
    assert inst.graph.degree(2) == 6
    assert inst.graph.num_vertices() == 3 + 1 + 6


def test_random_is_deterministic():
    a = gen_random_connected(9, 14, seed=11)
    b = gen_random_connected(9, 14, seed=11)
    assert a.graph == b.graph and (a.s, a.t) == (b.s, b.t)
    assert a.graph.num_edges() == 14 and a.graph.connected(a.s, a.t)


def test_random_rejects_infeasible():
    with pytest.raises(GraphError):
        gen_random_connected(4, 7, seed=0)


def test_genspec_dispatch():
    assert GenSpec("theta", (3, 2)).build(2).k == 2
    assert GenSpec("tree_sink", (4, 0)).build().graph.num_vertices() == 9
    with pytest.raises(ValueError):
        GenSpec("wheel", (3,)).build()
