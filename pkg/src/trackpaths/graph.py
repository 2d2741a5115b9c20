"""Undirected simple graphs and the structural primitives the reduction rules need.

Everything path-related is answered with unit-capacity max-flow on a
vertex-split network, so no general disjoint-paths solver is required.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable


class GraphError(ValueError):
    """Raised on malformed graph operations (unknown vertex, self-loop, ...)."""


class Graph:
    """Simple undirected graph over dense non-negative integer ids.

    Ids handed out by :meth:`add_vertex` are never reused, even after the
    vertex is removed, so vertex identity is stable across rule applications.
    """

    def __init__(self, n: int = 0, edges: Iterable[tuple[int, int]] = ()):
        self.adj: dict[int, set[int]] = {v: set() for v in range(n)}
        self._next_id = n
        for u, v in edges:
            self.add_edge(u, v)

    # -- construction ---------------------------------------------------------

    def add_vertex(self, v: int | None = None) -> int:
        if v is None:
            v = self._next_id
        if v in self.adj:
            raise GraphError(f"vertex {v} already present")
        if v < 0:
            raise GraphError("vertex ids must be non-negative")
        self.adj[v] = set()
        self._next_id = max(self._next_id, v + 1)
        return v

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise GraphError(f"self-loop at {u}")
        self._require(u)
        self._require(v)
        if v in self.adj[u]:
            raise GraphError(f"duplicate edge ({u}, {v})")
        self.adj[u].add(v)
        self.adj[v].add(u)

    def remove_edge(self, u: int, v: int) -> None:
        if not self.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge")
        self.adj[u].discard(v)
        self.adj[v].discard(u)

    def remove_vertex(self, v: int) -> None:
        self._require(v)
        for u in self.adj.pop(v):
            self.adj[u].discard(v)

    def copy(self) -> "Graph":
        g = Graph()
        g.adj = {v: set(nb) for v, nb in self.adj.items()}
        g._next_id = self._next_id
        return g

    # -- queries --------------------------------------------------------------

    def _require(self, v: int) -> None:
        if v not in self.adj:
            raise GraphError(f"unknown vertex {v}")

    def __contains__(self, v: object) -> bool:
        return v in self.adj

    def __len__(self) -> int:
        return len(self.adj)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.adj == other.adj

    def __repr__(self) -> str:
        return f"Graph(n={self.num_vertices()}, m={self.num_edges()})"

    @property
    def next_id(self) -> int:
        return self._next_id

    def vertices(self) -> list[int]:
        return sorted(self.adj)

    def neighbors(self, v: int) -> set[int]:
        self._require(v)
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return u in self.adj and v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u, nb in self.adj.items() for v in nb if u < v)

    def num_vertices(self) -> int:
        return len(self.adj)

    def num_edges(self) -> int:
        return sum(len(nb) for nb in self.adj.values()) // 2

    def subgraph_without(self, removed: Iterable[int]) -> "Graph":
        removed = set(removed)
        g = Graph()
        g.adj = {v: nb - removed for v, nb in self.adj.items() if v not in removed}
        g._next_id = self._next_id
        return g

    def audit(self) -> None:
        """Check symmetry and simplicity; raise GraphError on violation."""
        for v, nb in self.adj.items():
            if v in nb:
                raise GraphError(f"self-loop at {v}")
            for u in nb:
                if u not in self.adj or v not in self.adj[u]:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    def components(self, within: Iterable[int] | None = None) -> list[list[int]]:
        """Connected components (sorted lists, ordered by smallest member)."""
        allowed = set(self.adj) if within is None else set(within)
        seen: set[int] = set()
        comps = []
        for root in sorted(allowed):
            if root in seen:
                continue
            seen.add(root)
            comp = [root]
            queue = deque([root])
            while queue:
                x = queue.popleft()
                for y in self.adj[x]:
                    if y in allowed and y not in seen:
                        seen.add(y)
                        comp.append(y)
                        queue.append(y)
            comps.append(sorted(comp))
        return comps

    def connected(self, u: int, v: int) -> bool:
        self._require(u)
        self._require(v)
        seen = {u}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            if x == v:
                return True
            for y in self.adj[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return False

    def is_forest(self) -> bool:
        return self.num_edges() == self.num_vertices() - len(self.components())


@dataclass
class Instance:
    """An s-t graph together with the tracker budget k."""

    graph: Graph
    s: int
    t: int
    k: int = 0

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        if self.s == self.t:
            raise GraphError("source and destination must differ")
        if self.s not in self.graph or self.t not in self.graph:
            raise GraphError("terminals must be vertices of the graph")
        if self.k < 0:
            raise GraphError("budget k must be non-negative")

    def copy(self) -> "Instance":
        return Instance(self.graph.copy(), self.s, self.t, self.k)

    @property
    def terminals(self) -> tuple[int, int]:
        return self.s, self.t


# -- unit-capacity flow on vertex-split networks -------------------------------


@dataclass
class _FlowNetwork:
    cap: dict[object, dict[object, int]] = field(default_factory=dict)

    def arc(self, a, b, c: int = 1) -> None:
        self.cap.setdefault(a, {})
        self.cap.setdefault(b, {})
        self.cap[a][b] = self.cap[a].get(b, 0) + c
        self.cap[b].setdefault(a, 0)

    def max_flow(self, src, dst, limit: int) -> int:
        flow = 0
        while flow < limit:
            parent = {src: None}
            queue = deque([src])
            while queue and dst not in parent:
                x = queue.popleft()
                for y, c in self.cap[x].items():
                    if c > 0 and y not in parent:
                        parent[y] = x
                        queue.append(y)
            if dst not in parent:
                break
            y = dst
            while parent[y] is not None:
                x = parent[y]
                self.cap[x][y] -= 1
                self.cap[y][x] += 1
                y = x
            flow += 1
        return flow


_INF = 1 << 30


def _split_network(g: Graph, unsplit: set[int]) -> _FlowNetwork:
    """Vertex v becomes (v,0)->(v,1) with capacity 1 unless v is in `unsplit`."""
    net = _FlowNetwork()
    for v in g.adj:
        net.arc((v, 0), (v, 1), _INF if v in unsplit else 1)
    for u, v in g.edges():
        net.arc((u, 1), (v, 0))
        net.arc((v, 1), (u, 0))
    return net


def _on_st_path(g: Graph, s: int, t: int, v: int) -> bool:
    if v in (s, t):
        return g.connected(s, t)
    net = _split_network(g, {v})
    sink = "sink"
    net.arc((s, 1), sink)
    net.arc((t, 1), sink)
    return net.max_flow((v, 0), sink, 2) >= 2


def vertex_on_st_path(inst: Instance, v: int) -> bool:
    """True iff some simple s-t path visits v."""
    inst.graph._require(v)
    return _on_st_path(inst.graph, inst.s, inst.t, v)


def edge_on_st_path(inst: Instance, u: int, v: int) -> bool:
    """True iff some simple s-t path uses the edge (u, v).

    The edge is subdivided by a fresh vertex and the vertex test is asked
    about the subdivision vertex.
    """
    if not inst.graph.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    g = inst.graph.copy()
    g.remove_edge(u, v)
    w = g.add_vertex()
    g.add_edge(u, w)
    g.add_edge(w, v)
    return _on_st_path(g, inst.s, inst.t, w)


def max_vertex_disjoint_paths(g: Graph, u: int, v: int, limit: int | None = None) -> int:
    """Maximum number of internally vertex-disjoint u-v paths.

    An edge (u, v) counts as one path. `limit` stops the search early once
    that many paths are found.
    """
    if u == v:
        raise GraphError("endpoints must differ")
    g._require(u)
    g._require(v)
    if limit is None:
        limit = len(g.adj)
    net = _split_network(g, {u, v})
    return net.max_flow((u, 1), (v, 0), limit)


def has_local_linkage(inst: Instance, a: int, b: int, forbidden: Iterable[int]) -> bool:
    """Decide whether {a, b} is a local source/destination pair.

    True iff G - forbidden holds vertex-disjoint paths s->a and b->t, or
    s->b and a->t. A fresh vertex adjacent to exactly a and b lies on a
    simple s-t path precisely when such a pair of paths exists.
    """
    forbidden = set(forbidden)
    if inst.s in forbidden or inst.t in forbidden:
        raise GraphError("terminals may not be forbidden")
    if a in forbidden or b in forbidden:
        raise GraphError("linkage endpoints may not be forbidden")
    if a == b:
        raise GraphError("linkage endpoints must differ")
    g = inst.graph.subgraph_without(forbidden)
    g._require(a)
    g._require(b)
    w = g.add_vertex()
    g.add_edge(a, w)
    g.add_edge(b, w)
    return _on_st_path(g, inst.s, inst.t, w)


# -- feedback vertex sets ------------------------------------------------------


def _prune_low_degree(adj: dict[int, set[int]]) -> None:
    queue = deque(v for v in sorted(adj) if len(adj[v]) <= 1)
    while queue:
        v = queue.popleft()
        if v not in adj or len(adj[v]) > 1:
            continue
        for u in adj.pop(v):
            adj[u].discard(v)
            if len(adj[u]) <= 1:
                queue.append(u)


def fvs_2approx(g: Graph, weights: dict[int, float] | None = None) -> set[int]:
    """Feedback vertex set within a factor 2 of optimal (Becker & Geiger).

    Local-ratio scheme: after stripping vertices of degree <= 1, charge
    every vertex gamma * (deg - 1) where gamma is the smallest
    weight / (deg - 1); vertices reaching zero weight enter the solution.
    A reverse-order pass then drops members that are redundant.
    """
    from fractions import Fraction

    w = {v: Fraction(weights[v] if weights else 1) for v in g.adj}
    adj = {v: set(nb) for v, nb in g.adj.items()}
    chosen: list[int] = []
    _prune_low_degree(adj)
    while adj:
        gamma = min(w[v] / (len(adj[v]) - 1) for v in adj)
        zero = []
        for v in sorted(adj):
            w[v] -= gamma * (len(adj[v]) - 1)
            if w[v] == 0:
                zero.append(v)
        for v in zero:
            chosen.append(v)
            for u in adj.pop(v):
                adj[u].discard(v)
        _prune_low_degree(adj)

    solution = set(chosen)
    for v in reversed(chosen):
        trial = solution - {v}
        if g.subgraph_without(trial).is_forest():
            solution = trial
    return solution


def forest_decompose(g: Graph, fvs: Iterable[int]) -> list[list[int]]:
    """Trees of g - fvs as sorted vertex lists; the first entry is the root."""
    rest = g.subgraph_without(fvs)
    if not rest.is_forest():
        raise GraphError("removing the given set leaves a cycle")
    return rest.components()
