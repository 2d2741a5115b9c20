"""Global NO-rules built on a feedback vertex set, and the kernelization pipeline."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations

from .graph import Instance, forest_decompose, fvs_2approx, max_vertex_disjoint_paths
from .reduction import ReductionTrace, Status, exhaust_local_rules


class NoReason(str, enum.Enum):
    BUDGET_EXHAUSTED = "BudgetExhausted"
    FVS_TOO_LARGE = "FvsTooLarge"
    DISJOINT_PATHS = "DisjointPaths"
    PER_SINK_BOUND = "PerSinkBound"
    V1_BOUND = "V1Bound"
    V2_BOUND = "V2Bound"


class Verdict(str, enum.Enum):
    REDUCED = "Reduced"
    TRIVIAL_YES = "TrivialYes"
    NO = "No"
    NO_PATH = "NoPath"


class KernelBoundError(AssertionError):
    """A surviving instance breaks the quadratic size bound: a rule is mis-implemented."""


def vertex_bound(k: int) -> int:
    return 104 * k * k - 18 * k


def edge_bound(k: int) -> int:
    return 132 * k * k - 27 * k


def v4_bound(k: int) -> int:
    return 78 * k * k - 15 * k


def v1_threshold(k: int) -> int:
    return 6 * k * k


def v2_threshold(k: int) -> int:
    return 20 * k * k - 7 * k


def planar_bound(k: int) -> int:
    return 10 * k - 3


@dataclass
class Rejection:
    reason: NoReason
    witness: dict = field(default_factory=dict)


@dataclass
class VertexCategorization:
    S: set[int]
    V1: set[int]
    V2: set[int]
    V3: set[int]
    V4: set[int]
    E1: int
    E2: int
    E3: int
    tree_of: dict[int, int]
    trees: list[list[int]]

    def sizes(self) -> dict[str, int]:
        return {"S": len(self.S), "V1": len(self.V1), "V2": len(self.V2),
                "V3": len(self.V3), "V4": len(self.V4),
                "E1": self.E1, "E2": self.E2, "E3": self.E3}


@dataclass(frozen=True)
class TreeSinkRecord:
    sink: int
    tree: int
    delta: int


def rule7_fvs_bound(inst: Instance) -> tuple[set[int], Rejection | None]:
    S = fvs_2approx(inst.graph)
    if len(S) > 2 * inst.k:
        return S, Rejection(NoReason.FVS_TOO_LARGE, {"fvs": sorted(S)})
    return S, None


def disjoint_paths_no_check(inst: Instance) -> Rejection | None:
    """NO when some pair is joined by more than k + 1 internally disjoint paths."""
    g = inst.graph
    limit = inst.k + 2
    for u, v in combinations(g.vertices(), 2):
        # Cheap filter: the path count cannot exceed either degree.
        if min(g.degree(u), g.degree(v)) < limit:
            continue
        count = max_vertex_disjoint_paths(g, u, v, limit)
        if count > inst.k + 1:
            return Rejection(NoReason.DISJOINT_PATHS, {"u": u, "v": v, "paths": count})
    return None


def categorize(inst: Instance, S: set[int]) -> VertexCategorization:
    g = inst.graph
    trees = forest_decompose(g, S)
    tree_of = {v: i for i, tree in enumerate(trees) for v in tree}
    # for every S-vertex, the forest neighbours grouped by tree
    hits: dict[int, dict[int, int]] = {f: {} for f in S}
    for f in S:
        for u in g.neighbors(f):
            if u in tree_of:
                hits[f][tree_of[u]] = hits[f].get(tree_of[u], 0) + 1

    V1, V2, V3, V4 = set(), set(), set(), set()
    E1 = E2 = E3 = 0
    for v in sorted(tree_of):
        own = tree_of[v]
        sn = [f for f in g.neighbors(v) if f in S]
        if not sn:
            V4.add(v)
            continue
        same = any(hits[f][own] >= 2 for f in sn)
        other = any(len(hits[f]) >= 2 for f in sn)
        if same:
            V1.add(v)
            E1 += len(sn)
        if other:
            V2.add(v)
            E2 += len(sn)
        if not same and not other:
            V3.add(v)
            E3 += len(sn)
    return VertexCategorization(set(S), V1, V2, V3, V4, E1, E2, E3, tree_of, trees)


def tree_sink_census(inst: Instance, S: set[int]) -> list[TreeSinkRecord]:
    g = inst.graph
    trees = forest_decompose(g, S)
    tree_of = {v: i for i, tree in enumerate(trees) for v in tree}
    records = []
    for f in sorted(S):
        per_tree: dict[int, int] = {}
        for u in g.neighbors(f):
            if u in tree_of:
                per_tree[tree_of[u]] = per_tree.get(tree_of[u], 0) + 1
        records.extend(TreeSinkRecord(f, i, d) for i, d in sorted(per_tree.items()) if d >= 2)
    return records


def per_sink_bound(census: list[TreeSinkRecord], k: int) -> Rejection | None:
    by_sink: dict[int, list[TreeSinkRecord]] = {}
    for rec in census:
        by_sink.setdefault(rec.sink, []).append(rec)
    for f, recs in sorted(by_sink.items()):
        total = sum(r.delta for r in recs)
        if total > 3 * k:
            return Rejection(NoReason.PER_SINK_BOUND, {"sink": f, "delta_sum": total, "records": len(recs)})
        if len(recs) > k:
            return Rejection(NoReason.PER_SINK_BOUND, {"sink": f, "delta_sum": total, "records": len(recs)})
    return None


def rule8_v1_bound(cat: VertexCategorization, k: int) -> Rejection | None:
    if len(cat.V1) > v1_threshold(k):
        return Rejection(NoReason.V1_BOUND, {"V1": len(cat.V1), "threshold": v1_threshold(k)})
    return None


def rule9_v2_bound(cat: VertexCategorization, k: int) -> Rejection | None:
    if len(cat.V2) > v2_threshold(k):
        return Rejection(NoReason.V2_BOUND, {"V2": len(cat.V2), "threshold": v2_threshold(k)})
    return None


def kernel_size_assert(inst: Instance, cat: VertexCategorization) -> None:
    k = inst.k
    g = inst.graph
    checks = [("|V|", g.num_vertices(), vertex_bound(k)),
              ("|E|", g.num_edges(), edge_bound(k)),
              ("|V4|", len(cat.V4), v4_bound(k))]
    for name, value, bound in checks:
        if value > bound:
            raise KernelBoundError(
                f"{name} = {value} exceeds {bound} at k = {k}; "
                f"categories {cat.sizes()}, S = {sorted(cat.S)}, edges = {g.edges()}")


@dataclass
class PlanarDiagnostic:
    n: int
    bound: int

    @property
    def within(self) -> bool:
        return self.n <= self.bound


def planar_bound_diag(inst: Instance, planar_asserted: bool = True) -> PlanarDiagnostic | None:
    """Compare |V| with 10k - 3. The caller vouches for planarity; nothing is tested."""
    if not planar_asserted:
        return None
    return PlanarDiagnostic(inst.graph.num_vertices(), planar_bound(inst.k))


@dataclass
class KernelOutcome:
    verdict: Verdict
    reduced: Instance | None
    forced_trackers: list[int]
    trace: ReductionTrace
    no_reason: NoReason | None = None
    witness: dict = field(default_factory=dict)
    categorization: VertexCategorization | None = None

    @property
    def residual_k(self) -> int:
        return self.trace.current_k

    @property
    def is_yes(self) -> bool | None:
        """YES/NO as far as the pipeline can tell; None for an unresolved kernel."""
        if self.verdict is Verdict.TRIVIAL_YES:
            return True
        if self.verdict is Verdict.NO:
            return False
        return None


def kernelize(inst: Instance) -> KernelOutcome:
    """Run the full pipeline on a copy of `inst`."""
    work = inst.copy()
    trace = ReductionTrace(inst.k)
    local = exhaust_local_rules(work, trace)

    def finish(verdict, reduced=None, rejection=None, cat=None):
        out = KernelOutcome(verdict, reduced, trace.forced_trackers, trace, categorization=cat)
        if rejection is not None:
            out.no_reason = rejection.reason
            out.witness = rejection.witness
        return out

    if local.status is Status.NO:
        exc = local.no_reason
        witness = dict(exc.witness, rule=exc.rule, needed=exc.needed, available=exc.available)
        return finish(Verdict.NO, rejection=Rejection(NoReason.BUDGET_EXHAUSTED, witness))
    if local.status is Status.TRIVIAL_YES:
        return finish(Verdict.TRIVIAL_YES)
    if local.status is Status.NO_PATH:
        return finish(Verdict.NO_PATH)

    rejection = disjoint_paths_no_check(work)
    if rejection:
        return finish(Verdict.NO, rejection=rejection)
    S, rejection = rule7_fvs_bound(work)
    if rejection:
        return finish(Verdict.NO, rejection=rejection)
    rejection = per_sink_bound(tree_sink_census(work, S), work.k)
    if rejection:
        return finish(Verdict.NO, rejection=rejection)
    cat = categorize(work, S)
    rejection = rule8_v1_bound(cat, work.k) or rule9_v2_bound(cat, work.k)
    if rejection:
        return finish(Verdict.NO, rejection=rejection, cat=cat)
    kernel_size_assert(work, cat)
    return finish(Verdict.REDUCED, reduced=work, cat=cat)
