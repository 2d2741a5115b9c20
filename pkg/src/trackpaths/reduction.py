"""Local reduction rules R1-R6, applied to a fixpoint.

Each ``ruleN_*`` function performs at most one logical application (R1 and R2
sweep until stable) on the instance in place and appends what it did to an
optional :class:`ReductionTrace`. :func:`exhaust_local_rules` drives them in
priority order, restarting from R1 after every change.
"""

from __future__ import annotations

import enum
from dataclasses import asdict, dataclass, field

from .graph import Instance, edge_on_st_path, has_local_linkage, vertex_on_st_path

RULES = ("R1V", "R1E", "R2", "R3", "R4", "R5", "R6")


class Status(str, enum.Enum):
    STABLE = "Stable"
    TRIVIAL_YES = "TrivialYes"
    NO = "No"
    NO_PATH = "NoPath"


@dataclass
class RuleEvent:
    rule: str
    removed_vertices: list[int] = field(default_factory=list)
    removed_edges: list[tuple[int, int]] = field(default_factory=list)
    added_edges: list[tuple[int, int]] = field(default_factory=list)
    forced_trackers: list[int] = field(default_factory=list)
    k_delta: int = 0
    relabeled_terminal: tuple[int, int] | None = None

    def apply(self, inst: Instance) -> None:
        """Replay this event on `inst`."""
        g = inst.graph
        for u, v in self.removed_edges:
            g.remove_edge(u, v)
        if self.relabeled_terminal is not None:
            old, new = self.relabeled_terminal
            if inst.s == old:
                inst.s = new
            elif inst.t == old:
                inst.t = new
            else:
                raise ValueError(f"{old} is not a terminal")
        for v in self.removed_vertices:
            g.remove_vertex(v)
        for u, v in self.added_edges:
            g.add_edge(u, v)
        inst.k += self.k_delta

    def to_dict(self) -> dict:
        d = asdict(self)
        d["removed_edges"] = [list(e) for e in self.removed_edges]
        d["added_edges"] = [list(e) for e in self.added_edges]
        if self.relabeled_terminal is not None:
            d["relabeled_terminal"] = list(self.relabeled_terminal)
        return d


@dataclass
class ReductionTrace:
    initial_k: int
    events: list[RuleEvent] = field(default_factory=list)
    diagnostics: list[str] = field(default_factory=list)

    def record(self, event: RuleEvent) -> None:
        self.events.append(event)

    @property
    def current_k(self) -> int:
        return self.initial_k + sum(e.k_delta for e in self.events)

    @property
    def forced_trackers(self) -> list[int]:
        return [v for e in self.events for v in e.forced_trackers]

    def rule_counts(self) -> dict[str, int]:
        counts = dict.fromkeys(RULES, 0)
        for e in self.events:
            counts[e.rule] += 1
        return counts

    def replay(self, original: Instance) -> Instance:
        inst = original.copy()
        for e in self.events:
            e.apply(inst)
        return inst


@dataclass
class BudgetExhausted(Exception):
    """A forcing rule needs more trackers than the remaining budget."""

    rule: str
    needed: int
    available: int
    witness: dict = field(default_factory=dict)


def _emit(inst: Instance, trace: ReductionTrace | None, event: RuleEvent) -> None:
    event.apply(inst)
    if trace is not None:
        trace.record(event)


def rule1_prune(inst: Instance, trace: ReductionTrace | None = None) -> bool:
    """Delete vertices and edges that lie on no simple s-t path."""
    changed = False
    while True:
        g = inst.graph
        dead = [v for v in g.vertices()
                if v not in inst.terminals and not vertex_on_st_path(inst, v)]
        for v in dead:
            _emit(inst, trace, RuleEvent("R1V", removed_vertices=[v]))
        dead_edges = [e for e in g.edges() if not edge_on_st_path(inst, *e)]
        for e in dead_edges:
            _emit(inst, trace, RuleEvent("R1E", removed_edges=[e]))
        if not dead and not dead_edges:
            return changed
        changed = True


def rule2_relabel_terminal(inst: Instance, trace: ReductionTrace | None = None) -> bool:
    """Drop a degree-1 terminal and promote its neighbour (unless it is the other terminal)."""
    changed = False
    progress = True
    while progress:
        progress = False
        for term, other in ((inst.s, inst.t), (inst.t, inst.s)):
            nb = inst.graph.neighbors(term)
            if len(nb) == 1 and other not in nb:
                (new,) = nb
                _emit(inst, trace, RuleEvent("R2", removed_vertices=[term],
                                             relabeled_terminal=(term, new)))
                changed = progress = True
                break
    return changed


def rule3_contract_deg2(inst: Instance, trace: ReductionTrace | None = None) -> bool:
    """Shortcut a degree-2 vertex b whose neighbour a also has degree 2.

    b is deleted and a is joined to b's other neighbour c. Neither a nor b
    may be a terminal: with a = s, the vertex b marks "the path leaves s
    towards b", which no single vertex of the contracted graph can express.
    """
    g = inst.graph
    for b in g.vertices():
        if b in inst.terminals or g.degree(b) != 2:
            continue
        for a in sorted(g.neighbors(b)):
            if a in inst.terminals or g.degree(a) != 2:
                continue
            (c,) = g.neighbors(b) - {a}
            if g.has_edge(a, c):
                if trace is not None:
                    trace.diagnostics.append(f"R3 skipped at b={b}: edge ({a}, {c}) exists")
                continue
            _emit(inst, trace, RuleEvent("R3", removed_vertices=[b],
                                         added_edges=[(min(a, c), max(a, c))]))
            return True
    return False


def rule4_trivial_yes(inst: Instance, trace: ReductionTrace | None = None) -> bool:
    """Fire when only the terminals are left and they are adjacent."""
    g = inst.graph
    fired = g.num_vertices() == 2 and g.has_edge(inst.s, inst.t)
    if fired and trace is not None:
        trace.record(RuleEvent("R4"))
    return fired


def rule5_triangle(inst: Instance, trace: ReductionTrace | None = None) -> bool:
    """Force a non-terminal degree-2 vertex whose neighbours are adjacent."""
    g = inst.graph
    for b in g.vertices():
        if b in inst.terminals or g.degree(b) != 2:
            continue
        a, c = sorted(g.neighbors(b))
        if not g.has_edge(a, c):
            continue
        if inst.k < 1:
            raise BudgetExhausted("R5", 1, inst.k, {"vertex": b})
        _emit(inst, trace, RuleEvent("R5", removed_vertices=[b], forced_trackers=[b], k_delta=-1))
        return True
    return False


def parallel_bundles(inst: Instance):
    """Yield (a, b, X) with X the non-terminal degree-2 common neighbours of a and b, |X| >= 2."""
    g = inst.graph
    by_pair: dict[tuple[int, int], list[int]] = {}
    for x in g.vertices():
        if x in inst.terminals or g.degree(x) != 2:
            continue
        a, b = sorted(g.neighbors(x))
        by_pair.setdefault((a, b), []).append(x)
    for (a, b), xs in sorted(by_pair.items()):
        if len(xs) >= 2:
            yield a, b, xs


def rule6_parallel_bundle(inst: Instance, trace: ReductionTrace | None = None) -> bool:
    """Collapse m parallel degree-2 vertices between a linked pair, forcing m - 1 trackers."""
    for a, b, xs in parallel_bundles(inst):
        if not has_local_linkage(inst, a, b, xs):
            continue
        m = len(xs)
        if m > inst.k + 1:
            raise BudgetExhausted("R6", m - 1, inst.k, {"a": a, "b": b, "bundle": list(xs)})
        forced = xs[: m - 1]
        _emit(inst, trace, RuleEvent("R6", removed_vertices=list(forced),
                                     forced_trackers=list(forced), k_delta=-(m - 1)))
        return True
    return False


@dataclass
class LocalResult:
    status: Status
    no_reason: BudgetExhausted | None = None


LOCAL_RULES = (rule1_prune, rule2_relabel_terminal, rule3_contract_deg2,
               rule4_trivial_yes, rule5_triangle, rule6_parallel_bundle)


def exhaust_local_rules(inst: Instance, trace: ReductionTrace | None = None) -> LocalResult:
    """Apply R1..R6 by priority, restarting at R1 after each change."""
    if trace is None:
        trace = ReductionTrace(inst.k)
    if not inst.graph.connected(inst.s, inst.t):
        return LocalResult(Status.NO_PATH)
    while True:
        try:
            for rule in LOCAL_RULES:
                fired = rule(inst, trace)
                if rule is rule4_trivial_yes and fired:
                    return LocalResult(Status.TRIVIAL_YES)
                if fired:
                    break
            else:
                return LocalResult(Status.STABLE)
        except BudgetExhausted as exc:
            return LocalResult(Status.NO, exc)
