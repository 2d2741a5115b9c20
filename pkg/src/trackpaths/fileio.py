"""Plain-text instance files in a DIMACS-like layout.

    c <comment>
    p tracking <n> <m>
    s <id>
    t <id>
    k <budget>          (optional)
    e <u> <v>           (m lines)

Ids in files are 1-based; internally vertex i of the file is id i - 1.
"""

from __future__ import annotations

from pathlib import Path

from .graph import Graph, GraphError, Instance


class InstanceFormatError(ValueError):
    def __init__(self, lineno: int | None, message: str):
        where = f"line {lineno}: " if lineno is not None else ""
        super().__init__(where + message)
        self.lineno = lineno


def _ints(fields, lineno, count):
    if len(fields) != count:
        raise InstanceFormatError(lineno, f"expected {count} integer(s), got {len(fields)}")
    try:
        return [int(x) for x in fields]
    except ValueError:
        raise InstanceFormatError(lineno, f"not an integer in {' '.join(fields)!r}") from None


def parse_instance(text: str) -> tuple[Instance, bool]:
    """Parse file text; the flag says whether a `k` line was present."""
    n = m = s = t = k = None
    edges: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        fields = raw.split()
        if not fields or fields[0] == "c":
            continue
        tag, rest = fields[0], fields[1:]
        if tag == "p":
            if n is not None:
                raise InstanceFormatError(lineno, "duplicate header")
            if len(rest) != 3 or rest[0] != "tracking":
                raise InstanceFormatError(lineno, "header must read 'p tracking <n> <m>'")
            n, m = _ints(rest[1:], lineno, 2)
            if n < 2 or m < 0:
                raise InstanceFormatError(lineno, "need n >= 2 and m >= 0")
        elif n is None:
            raise InstanceFormatError(lineno, f"'{tag}' line before the header")
        elif tag in ("s", "t", "k"):
            (value,) = _ints(rest, lineno, 1)
            if tag == "s":
                if s is not None:
                    raise InstanceFormatError(lineno, "duplicate 's' line")
                s = value
            elif tag == "t":
                if t is not None:
                    raise InstanceFormatError(lineno, "duplicate 't' line")
                t = value
            else:
                if k is not None:
                    raise InstanceFormatError(lineno, "duplicate 'k' line")
                if value < 0:
                    raise InstanceFormatError(lineno, "budget must be non-negative")
                k = value
            if tag != "k" and not 1 <= value <= n:
                raise InstanceFormatError(lineno, f"vertex {value} outside [1, {n}]")
        elif tag == "e":
            u, v = _ints(rest, lineno, 2)
            for x in (u, v):
                if not 1 <= x <= n:
                    raise InstanceFormatError(lineno, f"vertex {x} outside [1, {n}]")
            edges.append((lineno, u, v))
        else:
            raise InstanceFormatError(lineno, f"unknown line type '{tag}'")

    if n is None:
        raise InstanceFormatError(None, "missing 'p tracking' header")
    if s is None or t is None:
        raise InstanceFormatError(None, "missing 's' or 't' line")
    if s == t:
        raise InstanceFormatError(None, "source and destination must differ")
    if len(edges) != m:
        raise InstanceFormatError(None, f"header announces {m} edges, found {len(edges)}")
    g = Graph(n)
    for lineno, u, v in edges:
        try:
            g.add_edge(u - 1, v - 1)
        except GraphError as exc:
            raise InstanceFormatError(lineno, str(exc)) from None
    return Instance(g, s - 1, t - 1, k or 0), k is not None


def read_instance(path) -> tuple[Instance, bool]:
    return parse_instance(Path(path).read_text())


def relabel_dense(inst: Instance) -> tuple[Instance, list[int]]:
    """Renumber vertices to 0..n-1 in id order; returns the old id of each new id."""
    old = inst.graph.vertices()
    new_of = {v: i for i, v in enumerate(old)}
    g = Graph(len(old), [(new_of[u], new_of[v]) for u, v in inst.graph.edges()])
    return Instance(g, new_of[inst.s], new_of[inst.t], inst.k), old


def serialize_instance(inst: Instance, comments: list[str] = ()) -> str:
    dense, _ = relabel_dense(inst)
    g = dense.graph
    lines = [f"c {c}" for c in comments]
    lines.append(f"p tracking {g.num_vertices()} {g.num_edges()}")
    lines.append(f"s {dense.s + 1}")
    lines.append(f"t {dense.t + 1}")
    lines.append(f"k {dense.k}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def write_instance(inst: Instance, path, comments: list[str] = ()) -> None:
    Path(path).write_text(serialize_instance(inst, comments))
