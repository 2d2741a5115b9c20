import pytest
from hypothesis import given, settings

from bruteforce import min_tracking_brute, st_paths
from conftest import c4, make, small_instances
from trackpaths.generators import gen_theta
from trackpaths.oracle import min_tracking_set
from trackpaths.reduction import (BudgetExhausted, ReductionTrace, Status, exhaust_local_rules,
                                  parallel_bundles, rule1_prune, rule2_relabel_terminal,
                                  rule3_contract_deg2, rule4_trivial_yes, rule5_triangle,
                                  rule6_parallel_bundle)


class TestRule1:
    def test_pendant_removed(self):
        inst = c4()
        inst.graph.add_vertex(4)
        inst.graph.add_edge(2, 4)
        trace = ReductionTrace(0)
        assert rule1_prune(inst, trace)
        assert inst.graph.vertices() == [0, 1, 2, 3]
        assert trace.rule_counts()["R1V"] == 1

    def test_chord_kept(self):
        inst = c4()
        inst.graph.add_edge(2, 3)
        assert not rule1_prune(inst)
        assert inst.graph.has_edge(2, 3)

    def test_edge_between_terminal_side_cycle(self):
        # triangle hanging off s: 0-2-3-0, path 0-4-1; edge (2,3) is off-path
        inst = make(5, [(0, 2), (2, 3), (3, 0), (0, 4), (4, 1)])
        rule1_prune(inst)
        assert inst.graph.vertices() == [0, 1, 4]

    def test_terminals_survive(self):
        inst = make(3, [(0, 2)])
        rule1_prune(inst)
        assert {0, 1} <= set(inst.graph.vertices())


class TestRule2:
    def test_pendant_source(self):
        inst = make(4, [(0, 2), (2, 3), (3, 1), (2, 1)])
        assert rule2_relabel_terminal(inst)
        assert inst.s == 2 and 0 not in inst.graph.adj

    def test_adjacent_terminals_kept(self):
        inst = make(2, [(0, 1)])
        assert not rule2_relabel_terminal(inst)

    def test_star_center_terminal(self):
        # s is the centre of a star: degree > 1, nothing to do
        inst = make(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
        assert not rule2_relabel_terminal(inst)


class TestRule3:
    def test_long_chain(self):
        inst = make(5, [(0, 2), (2, 3), (3, 4), (4, 1), (0, 1)])
        assert rule3_contract_deg2(inst)
        assert inst.graph.num_vertices() == 4

    def test_guard_on_c4(self):
        # both degree-2 vertices of the square touch a terminal
        inst = c4()
        assert not rule3_contract_deg2(inst)
        assert inst.graph == c4().graph

    def test_triangle_shortcut_skipped(self):
        # triangle 2-3-4 with 3 and 4 of degree 2: contracting would double an edge
        inst = make(5, [(0, 2), (2, 1), (2, 3), (3, 4), (4, 2)])
        g_before = inst.graph.copy()
        trace = ReductionTrace(0)
        assert not rule3_contract_deg2(inst, trace)
        assert inst.graph == g_before and trace.diagnostics


class TestRule4:
    def test_fires_on_single_edge(self):
        assert rule4_trivial_yes(make(2, [(0, 1)]))

    def test_not_with_extra_vertex(self):
        assert not rule4_trivial_yes(make(3, [(0, 1), (1, 2)]))


class TestRule5:
    def test_forces_apex(self):
        inst = make(3, [(0, 2), (2, 1), (0, 1)], k=1)
        trace = ReductionTrace(1)
        assert rule5_triangle(inst, trace)
        assert trace.forced_trackers == [2] and inst.k == 0

    def test_budget(self):
        with pytest.raises(BudgetExhausted) as exc:
            rule5_triangle(make(3, [(0, 2), (2, 1), (0, 1)], k=0))
        assert exc.value.rule == "R5"


class TestRule6:
    def test_theta_bundle(self):
        inst = gen_theta(3, 2, k=2)
        assert list(parallel_bundles(inst)) == [(0, 1, [2, 3, 4])]
        trace = ReductionTrace(2)
        assert rule6_parallel_bundle(inst, trace)
        assert inst.k == 0 and trace.forced_trackers == [2, 3]
        assert inst.graph.vertices() == [0, 1, 4]

    def test_budget(self):
        with pytest.raises(BudgetExhausted) as exc:
            rule6_parallel_bundle(gen_theta(4, 2, k=1))
        assert (exc.value.needed, exc.value.available) == (3, 1)

    def test_unlinked_pair_skipped(self):
        # bundle between a and b hanging off a cut vertex c on the path
        inst = make(6, [(0, 2), (2, 1), (2, 3), (2, 4), (3, 5), (4, 5)], k=5)
        assert list(parallel_bundles(inst)) == [(2, 5, [3, 4])]
        assert not rule6_parallel_bundle(inst)


def test_exhaust_theta_trivial_yes():
    inst = gen_theta(3, 2, k=2)
    assert exhaust_local_rules(inst).status is Status.TRIVIAL_YES


def test_exhaust_no_path():
    assert exhaust_local_rules(make(3, [(0, 2)])).status is Status.NO_PATH


@settings(max_examples=200, deadline=None)
@given(small_instances(max_n=7, connected=True))
def test_local_rules_preserve_the_minimum(inst):
    inst.k = inst.graph.num_vertices()
    before = min_tracking_brute(inst)
    trace = ReductionTrace(inst.k)
    res = exhaust_local_rules(inst, trace)
    forced = len(trace.forced_trackers)
    if res.status is Status.TRIVIAL_YES:
        assert before == forced
    else:
        assert res.status is Status.STABLE
        assert before == min_tracking_set(inst)[0] + forced


@settings(max_examples=150, deadline=None)
@given(small_instances(max_n=8, connected=True))
def test_trace_replay_is_exact(inst):
    inst.k = inst.graph.num_vertices()
    work = inst.copy()
    trace = ReductionTrace(inst.k)
    exhaust_local_rules(work, trace)
    replayed = trace.replay(inst)
    assert replayed.graph == work.graph
    assert (replayed.s, replayed.t, replayed.k) == (work.s, work.t, work.k)
    assert trace.current_k == work.k


@settings(max_examples=150, deadline=None)
@given(small_instances(max_n=8, connected=True))
def test_stable_postconditions_and_idempotence(inst):
    inst.k = inst.graph.num_vertices()
    if exhaust_local_rules(inst).status is not Status.STABLE:
        return
    g = inst.graph
    snapshot = inst.copy()
    assert st_paths(inst)
    for rule in (rule1_prune, rule2_relabel_terminal, rule3_contract_deg2,
                 rule4_trivial_yes, rule5_triangle, rule6_parallel_bundle):
        assert not rule(inst)
    assert inst.graph == snapshot.graph
    for term in inst.terminals:
        assert g.degree(term) >= 2 or set(g.neighbors(term)) & set(inst.terminals)
