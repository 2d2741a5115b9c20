"""Sweeps over generator families measuring kernel size against the quadratic bound."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from itertools import product

from .generators import GenSpec
from .kernel import Verdict, edge_bound, kernelize, vertex_bound

CSV_HEADER = ["family", "params", "k", "verdict", "n_before", "m_before",
              "n_after", "m_after", "bound_v", "bound_e", "forced"]


class SweepError(ValueError):
    pass


def parse_range(text: str) -> list[int]:
    """'3' -> [3]; '2-5' -> [2, 3, 4, 5]."""
    try:
        if "-" in text:
            lo, hi = text.split("-", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(text)]
    except ValueError:
        raise SweepError(f"bad range {text!r}") from None


def parse_sweep(text: str, seeds: int = 1) -> list[GenSpec]:
    """'theta:2-6,2' expands into GenSpecs for every parameter combination.

    Random families get `seeds` specs per parameter combination.
    """
    family, _, rest = text.partition(":")
    if family not in ("theta", "tree_sink", "flower", "random", "path"):
        raise SweepError(f"unknown family {family!r}")
    ranges = [parse_range(part) for part in rest.split(",")] if rest else []
    specs = []
    for params in product(*ranges):
        for seed in range(seeds if family == "random" else 1):
            specs.append(GenSpec(family, tuple(params), seed))
    return specs


@dataclass
class Row:
    family: str
    params: str
    k: int
    verdict: str
    n_before: int
    m_before: int
    n_after: int | None
    m_after: int | None
    bound_v: int | None
    bound_e: int | None
    forced: int

    def as_list(self) -> list:
        return ["" if x is None else x for x in (
            self.family, self.params, self.k, self.verdict, self.n_before, self.m_before,
            self.n_after, self.m_after, self.bound_v, self.bound_e, self.forced)]


def run_sweep(specs: list[GenSpec], ks: list[int]) -> list[Row]:
    rows = []
    for spec in specs:
        label = ";".join(map(str, spec.params))
        if spec.family == "random":
            label += f";seed={spec.seed}"
        for k in ks:
            inst = spec.build(k)
            out = kernelize(inst)
            n_after = m_after = bound_v = bound_e = None
            if out.verdict is Verdict.REDUCED:
                red = out.reduced
                n_after, m_after = red.graph.num_vertices(), red.graph.num_edges()
            elif out.verdict is Verdict.TRIVIAL_YES:
                n_after, m_after = 2, 1
            if n_after is not None:
                bound_v, bound_e = vertex_bound(out.residual_k), edge_bound(out.residual_k)
            rows.append(Row(spec.family, label, k, out.verdict.value,
                            inst.graph.num_vertices(), inst.graph.num_edges(),
                            n_after, m_after, bound_v, bound_e, len(out.forced_trackers)))
    return rows


def rows_to_csv(rows: list[Row]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.as_list())
    return buf.getvalue()
