"""Independent brute-force references used only by the tests.

These work on plain adjacency dicts and enumerate simple paths directly; they
share no code with the flow-based primitives they check.
"""

from itertools import combinations


def simple_paths(adj, u, v, banned=frozenset()):
    out = []

    def walk(x, path):
        if x == v:
            out.append(tuple(path))
            return
        for y in sorted(adj[x]):
            if y not in path and y not in banned:
                path.append(y)
                walk(y, path)
                path.pop()

    if u not in banned:
        walk(u, [u])
    return out


def st_paths(inst):
    return simple_paths(inst.graph.adj, inst.s, inst.t)


def max_disjoint_brute(adj, u, v):
    paths = simple_paths(adj, u, v)
    # only the direct edge has an empty interior, so disjointness of
    # interiors is exactly internal vertex-disjointness
    interiors = [frozenset(p[1:-1]) for p in paths]
    best = 0

    def grow(start, used, count):
        nonlocal best
        best = max(best, count)
        for i in range(start, len(interiors)):
            if not interiors[i] & used:
                grow(i + 1, used | interiors[i], count + 1)

    grow(0, frozenset(), 0)
    return best


def linkage_brute(inst, a, b, forbidden):
    """Ordered pairs of disjoint paths s->x, y->t avoiding `forbidden`, {x, y} = {a, b}."""
    adj = inst.graph.adj
    forbidden = set(forbidden)
    for x, y in ((a, b), (b, a)):
        for p in simple_paths(adj, inst.s, x, banned=frozenset(forbidden | {y})):
            for q in simple_paths(adj, y, inst.t, banned=frozenset(forbidden | set(p))):
                return True
    return False


def min_fvs_brute(adj):
    verts = sorted(adj)
    for size in range(len(verts) + 1):
        for trial in combinations(verts, size):
            keep = set(verts) - set(trial)
            m = sum(1 for x in keep for y in adj[x] if y in keep) // 2
            if m <= len(keep) - _components(adj, keep):
                return size
    return len(verts)


def _components(adj, keep):
    seen, count = set(), 0
    for r in keep:
        if r in seen:
            continue
        count += 1
        stack = [r]
        seen.add(r)
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in keep and y not in seen:
                    seen.add(y)
                    stack.append(y)
    return count


def tracks(paths, trackers):
    trackers = set(trackers)
    seqs = [tuple(x for x in p if x in trackers) for p in paths]
    return len(set(seqs)) == len(seqs)


def min_tracking_brute(inst):
    """Smallest tracking set size by trying every subset of the whole vertex set."""
    paths = st_paths(inst)
    verts = sorted(inst.graph.adj)
    for size in range(len(verts) + 1):
        if any(tracks(paths, trial) for trial in combinations(verts, size)):
            return size
    return len(verts)
