"""Differential checks of the reduction pipeline against the brute-force oracle."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field

from .generators import gen_random_connected
from .graph import Instance, fvs_2approx
from .kernel import KernelBoundError, Verdict, edge_bound, kernelize, vertex_bound
from .oracle import is_tracking_set, min_fvs_exact, min_tracking_set
from .reduction import ReductionTrace, exhaust_local_rules, rule1_prune

FUZZ_CAP = 100_000
RULE_GROUPS = ("R1", "R2", "R3", "R4", "R5", "R6")


def rule_group(rule: str) -> str:
    return "R1" if rule.startswith("R1") else rule


def instance_rng(seed: int, index: int) -> random.Random:
    return random.Random(f"trackpaths:{seed}:{index}")


def random_instance(seed: int, index: int, max_n: int, min_n: int = 2,
                    max_extra: int | None = None) -> Instance:
    """Instance `index` of the stream named by `seed`.

    `max_extra` caps the number of edges beyond a spanning tree; None allows
    anything up to the complete graph.
    """
    rng = instance_rng(seed, index)
    n = rng.randint(min_n, max(min_n, max_n))
    top = n * (n - 1) // 2
    if max_extra is not None:
        top = min(top, n - 1 + max_extra)
    m = rng.randint(n - 1, top)
    return gen_random_connected(n, m, rng.getrandbits(32))


def oracle_yes(inst: Instance, cap: int = FUZZ_CAP) -> bool:
    return min_tracking_set(inst, cap)[0] <= inst.k


@dataclass
class RuleCheck:
    rule: str
    before_min: int
    after_min: int
    forced: int

    @property
    def passed(self) -> bool:
        return self.before_min == self.after_min + self.forced


def rule_checks(inst: Instance, cap: int = FUZZ_CAP) -> list[RuleCheck]:
    """Replay a full-budget reduction event by event, comparing oracle minima."""
    start = inst.copy()
    start.k = start.graph.num_vertices()
    trace = ReductionTrace(start.k)
    exhaust_local_rules(start.copy(), trace)
    cur = start.copy()
    before = min_tracking_set(cur, cap)[0]
    out = []
    for event in trace.events:
        event.apply(cur)
        after = min_tracking_set(cur, cap)[0]
        out.append(RuleCheck(rule_group(event.rule), before, after, len(event.forced_trackers)))
        before = after
    return out


@dataclass
class VerdictCheck:
    k: int
    verdict: Verdict
    oracle_yes: bool
    kernel_yes: bool | None
    bound_ok: bool

    @property
    def agrees(self) -> bool:
        return self.kernel_yes == self.oracle_yes


def verdict_checks(inst: Instance, cap: int = FUZZ_CAP) -> list[VerdictCheck]:
    """kernelize at every k in [0, n] against the oracle."""
    minimum = min_tracking_set(inst, cap)[0]
    out = []
    for k in range(inst.graph.num_vertices() + 1):
        probe = inst.copy()
        probe.k = k
        try:
            res = kernelize(probe)
        except KernelBoundError:
            out.append(VerdictCheck(k, Verdict.REDUCED, minimum <= k, None, False))
            continue
        bound_ok = True
        if res.verdict is Verdict.REDUCED:
            red = res.reduced
            kernel_yes = oracle_yes(red, cap)
            bound_ok = (red.graph.num_vertices() <= vertex_bound(red.k)
                        and red.graph.num_edges() <= edge_bound(red.k))
        elif res.verdict is Verdict.TRIVIAL_YES:
            kernel_yes = is_tracking_set(inst, res.forced_trackers, cap)
        else:
            kernel_yes = False if res.verdict is Verdict.NO else None
        out.append(VerdictCheck(k, res.verdict, minimum <= k, kernel_yes, bound_ok))
    return out


@dataclass
class InstanceReport:
    index: int
    n: int
    m: int
    tracking_min: int
    fvs_min: int
    fvs_approx: int
    verdicts: list[VerdictCheck]
    rules: list[RuleCheck]

    @property
    def ok(self) -> bool:
        return (all(v.agrees and v.bound_ok for v in self.verdicts)
                and all(r.passed for r in self.rules)
                and self.tracking_min >= self.fvs_min
                and self.fvs_approx <= 2 * self.fvs_min)


def check_instance(inst: Instance, index: int = 0, cap: int = FUZZ_CAP) -> InstanceReport:
    clean = inst.copy()
    rule1_prune(clean)
    fvs_min = min_fvs_exact(clean.graph)[0]
    return InstanceReport(
        index=index,
        n=inst.graph.num_vertices(),
        m=inst.graph.num_edges(),
        tracking_min=min_tracking_set(inst, cap)[0],
        fvs_min=fvs_min,
        fvs_approx=len(fvs_2approx(clean.graph)),
        verdicts=verdict_checks(inst, cap),
        rules=rule_checks(inst, cap),
    )


@dataclass
class FuzzSummary:
    count: int
    max_n: int
    seed: int
    verdict_checks: int = 0
    verdict_disagreements: int = 0
    kernel_bound_violations: int = 0
    fvs_lower_bound_violations: int = 0
    fvs_ratio_violations: int = 0
    rule_pass: Counter = field(default_factory=Counter)
    rule_fail: Counter = field(default_factory=Counter)
    verdict_counts: Counter = field(default_factory=Counter)
    first_failing_index: int | None = None

    @property
    def failures(self) -> int:
        return (self.verdict_disagreements + self.kernel_bound_violations
                + self.fvs_lower_bound_violations + self.fvs_ratio_violations
                + sum(self.rule_fail.values()))

    def add(self, rep: InstanceReport) -> None:
        for v in rep.verdicts:
            self.verdict_checks += 1
            self.verdict_counts[v.verdict.value] += 1
            self.verdict_disagreements += not v.agrees
            self.kernel_bound_violations += not v.bound_ok
        for r in rep.rules:
            (self.rule_pass if r.passed else self.rule_fail)[r.rule] += 1
        self.fvs_lower_bound_violations += rep.tracking_min < rep.fvs_min
        self.fvs_ratio_violations += rep.fvs_approx > 2 * rep.fvs_min
        if not rep.ok and self.first_failing_index is None:
            self.first_failing_index = rep.index

    def to_dict(self) -> dict:
        return {
            "count": self.count,
            "max_n": self.max_n,
            "seed": self.seed,
            "verdict_checks": self.verdict_checks,
            "verdict_disagreements": self.verdict_disagreements,
            "verdict_counts": dict(sorted(self.verdict_counts.items())),
            "rule_checks": {r: {"pass": self.rule_pass[r], "fail": self.rule_fail[r]}
                            for r in RULE_GROUPS},
            "kernel_bound_violations": self.kernel_bound_violations,
            "fvs_lower_bound_violations": self.fvs_lower_bound_violations,
            "fvs_ratio_violations": self.fvs_ratio_violations,
            "failures": self.failures,
            "first_failing_index": self.first_failing_index,
        }


def run_fuzz(count: int, max_n: int = 9, seed: int = 0, cap: int = FUZZ_CAP) -> FuzzSummary:
    summary = FuzzSummary(count, max_n, seed)
    for index in range(count):
        inst = random_instance(seed, index, max_n)
        summary.add(check_instance(inst, index, cap))
    return summary
