"""Deterministic instance families and seeded random instances."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field

from .graph import Graph, GraphError, Instance

FAMILIES = ("theta", "tree_sink", "flower", "random", "path")


def gen_theta(p: int, length: int = 2, k: int = 0) -> Instance:
    """s=0 and t=1 joined by p internally disjoint paths of `length` edges each."""
    if p < 1 or length < 2:
        raise ValueError("need p >= 1 and length >= 2")
    g = Graph(2)
    for _ in range(p):
        prev = 0
        for _ in range(length - 1):
            v = g.add_vertex()
            g.add_edge(prev, v)
            prev = v
        g.add_edge(prev, 1)
    return Instance(g, 0, 1, k)


def gen_path(length: int, k: int = 0) -> Instance:
    """A single s-t path with `length` edges."""
    if length < 1:
        raise ValueError("length must be positive")
    g = Graph(length + 1, [(i, i + 1) for i in range(length)])
    return Instance(g, 0, length, k)


def _binary_tree(g: Graph, root: int, leaves: int) -> list[int]:
    """Grow a balanced binary tree under `root` with `leaves` leaves; return the leaves."""
    if leaves == 1:
        return [root]
    left = leaves // 2
    out = []
    for count in (left, leaves - left):
        child = g.add_vertex()
        g.add_edge(root, child)
        out.extend(_binary_tree(g, child, count))
    return out


def gen_tree_sink(leaf_count: int, sink_is_t: bool = True, k: int = 0) -> Instance:
    """A binary tree rooted at s whose leaves all attach to one sink.

    With ``sink_is_t`` the sink is t. Otherwise the sink is a separate vertex
    and t subdivides the edge from the root to its last child, so t sits
    inside the tree with descendants of its own.
    """
    if leaf_count < 2:
        raise ValueError("leaf_count must be at least 2")
    g = Graph(2)
    s, second = 0, 1
    leaves = _binary_tree(g, s, leaf_count)
    if sink_is_t:
        sink = t = second
    else:
        t = second
        last = max(g.neighbors(s))
        g.remove_edge(s, last)
        g.add_edge(s, t)
        g.add_edge(t, last)
        sink = g.add_vertex()
    for leaf in leaves:
        g.add_edge(leaf, sink)
    return Instance(g, s, t, k)


def gen_flower(trees: int, leaves_per_tree: int, k: int = 0) -> Instance:
    """`trees` stars whose leaves share one sink.

    The first star's centre is s, the last one's is t; centres of the stars in
    between hang off s so that every petal lies on some s-t path.
    """
    if trees < 2 or leaves_per_tree < 2:
        raise ValueError("need trees >= 2 and leaves_per_tree >= 2")
    g = Graph(3)
    s, t, sink = 0, 1, 2
    for i in range(trees):
        if i == 0:
            centre = s
        elif i == trees - 1:
            centre = t
        else:
            centre = g.add_vertex()
            g.add_edge(s, centre)
        for _ in range(leaves_per_tree):
            leaf = g.add_vertex()
            g.add_edge(centre, leaf)
            g.add_edge(leaf, sink)
    return Instance(g, s, t, k)


def _eccentric_pair(g: Graph) -> tuple[int, int]:
    best = (-1, 0, 0)
    for u in g.vertices():
        dist = {u: 0}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            for y in g.adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        for v in g.vertices():
            if v > u and (dist[v], -u, -v) > (best[0], -best[1], -best[2]):
                best = (dist[v], u, v)
    return best[1], best[2]


def gen_random_connected(n: int, m: int, seed: int, k: int = 0) -> Instance:
    """Random spanning tree plus m - n + 1 extra edges; terminals are the farthest pair."""
    if n < 2 or not n - 1 <= m <= n * (n - 1) // 2:
        raise GraphError(f"infeasible (n={n}, m={m})")
    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    g = Graph(n)
    for i in range(1, n):
        g.add_edge(order[i], order[rng.randrange(i)])
    non_edges = [(u, v) for u in range(n) for v in range(u + 1, n) if not g.has_edge(u, v)]
    for u, v in rng.sample(non_edges, m - (n - 1)):
        g.add_edge(u, v)
    s, t = _eccentric_pair(g)
    return Instance(g, s, t, k)


@dataclass(frozen=True)
class GenSpec:
    family: str
    params: tuple[int, ...] = field(default_factory=tuple)
    seed: int = 0

    def build(self, k: int = 0) -> Instance:
        if self.family == "theta":
            return gen_theta(*self.params, k=k)
        if self.family == "tree_sink":
            leaves, sink_is_t = self.params
            return gen_tree_sink(leaves, bool(sink_is_t), k=k)
        if self.family == "flower":
            return gen_flower(*self.params, k=k)
        if self.family == "random":
            return gen_random_connected(*self.params, seed=self.seed, k=k)
        if self.family == "path":
            return gen_path(*self.params, k=k)
        raise ValueError(f"unknown family {self.family!r}")
