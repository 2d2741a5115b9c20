"""Brute-force ground truth for small instances.

Nothing here is clever on purpose: paths are enumerated by backtracking and
tracking sets by subset search, so these routines can referee the reduction
rules without sharing any of their machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .graph import Graph, Instance

DEFAULT_CAP = 10_000
FVS_SIZE_LIMIT = 20


class PathExplosion(RuntimeError):
    def __init__(self, cap: int):
        super().__init__(f"more than {cap} s-t paths; shrink the instance or raise the cap")
        self.cap = cap


class NoPath(RuntimeError):
    pass


def enumerate_st_paths(inst: Instance, cap: int = DEFAULT_CAP) -> list[tuple[int, ...]]:
    """All simple s-t paths in lexicographic vertex-id order."""
    if cap < 1:
        raise ValueError("cap must be positive")
    adj = {v: sorted(nb) for v, nb in inst.graph.adj.items()}
    s, t = inst.s, inst.t
    paths: list[tuple[int, ...]] = []
    path = [s]
    on_path = {s}

    def extend(v: int) -> None:
        if v == t:
            if len(paths) >= cap:
                raise PathExplosion(cap)
            paths.append(tuple(path))
            return
        for u in adj[v]:
            if u in on_path:
                continue
            path.append(u)
            on_path.add(u)
            extend(u)
            path.pop()
            on_path.discard(u)

    extend(s)
    return paths


def project_sequence(path: Sequence[int], trackers: Iterable[int]) -> tuple[int, ...]:
    members = set(trackers)
    return tuple(v for v in path if v in members)


def _duplicate_pair(paths, trackers):
    members = set(trackers)
    seen: dict[tuple[int, ...], tuple[int, ...]] = {}
    for p in paths:
        key = tuple(v for v in p if v in members)
        if key in seen:
            return seen[key], p
        seen[key] = p
    return None


def is_tracking_set(inst: Instance, trackers: Iterable[int], cap: int = DEFAULT_CAP) -> bool:
    return _duplicate_pair(enumerate_st_paths(inst, cap), trackers) is None


def find_conflict(inst: Instance, trackers: Iterable[int], cap: int = DEFAULT_CAP):
    """Two distinct s-t paths with the same tracker sequence, or None."""
    return _duplicate_pair(enumerate_st_paths(inst, cap), trackers)


def min_tracking_set(inst: Instance, cap: int = DEFAULT_CAP) -> tuple[int, tuple[int, ...]]:
    """Smallest tracking set, lexicographically least among the minimum ones.

    Terminals are never needed: every s-t path starts with s and ends with t,
    so they add the same prefix/suffix to every sequence.
    """
    paths = enumerate_st_paths(inst, cap)
    if not paths:
        raise NoPath("no s-t path exists")
    candidates = [v for v in inst.graph.vertices() if v not in (inst.s, inst.t)]
    # Only vertices that occur on some path can separate anything.
    used = set().union(*paths)
    candidates = [v for v in candidates if v in used]
    for size in range(len(candidates) + 1):
        for trial in combinations(candidates, size):
            if _duplicate_pair(paths, trial) is None:
                return size, trial
    raise AssertionError("all internal vertices always form a tracking set")


def _acyclic_without(g: Graph, removed: set[int]) -> bool:
    parent = {v: v for v in g.adj if v not in removed}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges():
        if u in removed or v in removed:
            continue
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def min_fvs_exact(g: Graph, limit: int = FVS_SIZE_LIMIT) -> tuple[int, tuple[int, ...]]:
    if g.num_vertices() > limit:
        raise ValueError(f"exact FVS limited to {limit} vertices")
    verts = g.vertices()
    for size in range(len(verts) + 1):
        for trial in combinations(verts, size):
            if _acyclic_without(g, set(trial)):
                return size, trial
    raise AssertionError("removing every vertex leaves a forest")


@dataclass(frozen=True)
class EquivalenceReport:
    before_min: int
    after_min: int
    forced: int

    @property
    def passed(self) -> bool:
        return self.before_min == self.after_min + self.forced


def check_rule_equivalence(before: Instance, after: Instance, forced: int,
                           cap: int = DEFAULT_CAP) -> EquivalenceReport:
    m1, _ = min_tracking_set(before, cap)
    m2, _ = min_tracking_set(after, cap)
    return EquivalenceReport(m1, m2, forced)
