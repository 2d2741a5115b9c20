import pytest
from hypothesis import given, settings

from bruteforce import min_fvs_brute, min_tracking_brute, st_paths, tracks
from conftest import c4, make, small_instances
from trackpaths.generators import gen_theta, gen_tree_sink
from trackpaths.oracle import (NoPath, PathExplosion, check_rule_equivalence, enumerate_st_paths,
                               find_conflict, is_tracking_set, min_fvs_exact, min_tracking_set,
                               project_sequence)
from trackpaths.reduction import rule1_prune


def test_c4_paths_in_lexicographic_order(square):
    assert enumerate_st_paths(square) == [(0, 2, 1), (0, 3, 1)]


def test_c4_needs_one_tracker(square):
    assert min_tracking_set(square) == (1, (2,))
    assert not is_tracking_set(square, [])
    assert is_tracking_set(square, [3])


def test_conflict_witness(square):
    p1, p2 = find_conflict(square, [])
    assert project_sequence(p1, []) == project_sequence(p2, [])
    assert find_conflict(square, [2]) is None


def test_projection_keeps_path_order():
    assert project_sequence((0, 5, 3, 4, 1), {4, 5}) == (5, 4)


def test_path_explosion():
    with pytest.raises(PathExplosion):
        enumerate_st_paths(gen_theta(6, 2), cap=5)


def test_no_path():
    with pytest.raises(NoPath):
        min_tracking_set(make(3, [(0, 2)]))


def test_single_path_needs_nothing():
    assert min_tracking_set(make(3, [(0, 2), (2, 1)])) == (0, ())


@pytest.mark.parametrize("p", range(1, 7))
def test_theta_minimum(p):
    assert min_tracking_set(gen_theta(p, 2))[0] == p - 1


@settings(max_examples=150, deadline=None)
@given(small_instances(max_n=7))
def test_min_matches_subset_search_over_all_vertices(inst):
    paths = st_paths(inst)
    if not paths:
        with pytest.raises(NoPath):
            min_tracking_set(inst)
        return
    size, witness = min_tracking_set(inst)
    assert size == min_tracking_brute(inst)
    assert tracks(paths, witness)


@settings(max_examples=100, deadline=None)
@given(small_instances(max_n=8))
def test_paths_match_reference(inst):
    assert sorted(enumerate_st_paths(inst, cap=10**6)) == sorted(st_paths(inst))


@settings(max_examples=150, deadline=None)
@given(small_instances(max_n=8))
def test_exact_fvs(inst):
    size, witness = min_fvs_exact(inst.graph)
    assert size == min_fvs_brute(inst.graph.adj)
    rest = inst.graph.subgraph_without(set(witness))
    assert rest.is_forest()


@settings(max_examples=150, deadline=None)
@given(small_instances(max_n=8))
def test_tracking_minimum_dominates_fvs_after_pruning(inst):
    if not st_paths(inst):
        return
    rule1_prune(inst)
    assert min_tracking_set(inst)[0] >= min_fvs_exact(inst.graph)[0]


def test_equivalence_report():
    before = gen_theta(3, 2)
    after = gen_theta(2, 2)
    assert check_rule_equivalence(before, after, 1).passed
    assert not check_rule_equivalence(before, after, 0).passed


def test_tree_sink_lower_bound():
    assert min_tracking_set(gen_tree_sink(4, True))[0] == 3
