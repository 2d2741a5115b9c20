"""Machine-readable kernelization reports.

Reports speak in file ids (1-based). They hold no timestamps so that equal
inputs give byte-identical JSON.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from .fileio import relabel_dense
from .graph import Instance
from .kernel import KernelOutcome, Verdict, edge_bound, planar_bound, vertex_bound

_ID_KEYS = {"u", "v", "a", "b", "sink", "vertex", "bundle", "fvs"}


def _to_file_ids(value):
    if isinstance(value, list):
        return [x + 1 for x in value]
    return value + 1


@dataclass
class SizeRecord:
    n: int
    m: int
    k: int


@dataclass
class KernelReport:
    verdict: str
    no_reason: str | None
    witness: dict
    original: SizeRecord
    reduced: SizeRecord | None
    residual_k: int
    forced_trackers: list[int]
    rule_counts: dict[str, int]
    categories: dict[str, int] | None
    bounds: dict[str, int] | None
    reduced_id_map: list[int] | None
    planar: dict | None = None
    diagnostics: list[str] = field(default_factory=list)

    @classmethod
    def from_outcome(cls, original: Instance, outcome: KernelOutcome,
                     planar: bool = False) -> "KernelReport":
        g = original.graph
        reduced = id_map = bounds = planar_info = None
        if outcome.verdict is Verdict.REDUCED:
            red = outcome.reduced
            reduced = SizeRecord(red.graph.num_vertices(), red.graph.num_edges(), red.k)
            _, old_ids = relabel_dense(red)
            id_map = [v + 1 for v in old_ids]
            bounds = {"vertices": vertex_bound(red.k), "edges": edge_bound(red.k)}
        if planar and reduced is not None:
            bound = planar_bound(reduced.k)
            planar_info = {"n": reduced.n, "bound": bound, "within": reduced.n <= bound}
        witness = {key: (_to_file_ids(val) if key in _ID_KEYS else val)
                   for key, val in sorted(outcome.witness.items())}
        cat = outcome.categorization
        return cls(
            verdict=outcome.verdict.value,
            no_reason=outcome.no_reason.value if outcome.no_reason else None,
            witness=witness,
            original=SizeRecord(g.num_vertices(), g.num_edges(), original.k),
            reduced=reduced,
            residual_k=outcome.residual_k,
            forced_trackers=sorted(v + 1 for v in outcome.forced_trackers),
            rule_counts=outcome.trace.rule_counts(),
            categories=cat.sizes() if cat else None,
            bounds=bounds,
            reduced_id_map=id_map,
            planar=planar_info,
            diagnostics=list(outcome.trace.diagnostics),
        )

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "KernelReport":
        d = dict(d)
        d["original"] = SizeRecord(**d["original"])
        if d["reduced"] is not None:
            d["reduced"] = SizeRecord(**d["reduced"])
        return cls(**d)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "KernelReport":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        lines = [f"verdict: {self.verdict}"]
        if self.no_reason:
            lines.append(f"reason: {self.no_reason} {self.witness}")
        o = self.original
        lines.append(f"original: n={o.n} m={o.m} k={o.k}")
        if self.reduced:
            r = self.reduced
            lines.append(f"reduced: n={r.n} m={r.m} k={r.k} "
                         f"(bounds: n<={self.bounds['vertices']}, m<={self.bounds['edges']})")
        lines.append(f"residual k: {self.residual_k}")
        lines.append("forced trackers: " + (" ".join(map(str, self.forced_trackers)) or "-"))
        fired = ", ".join(f"{r}x{c}" for r, c in self.rule_counts.items() if c)
        lines.append("rules fired: " + (fired or "-"))
        if self.categories:
            lines.append("categories: " + " ".join(f"|{k}|={v}" for k, v in self.categories.items()))
        if self.planar:
            state = "within" if self.planar["within"] else "outside"
            lines.append(f"planar diagnostic: n={self.planar['n']} vs 10k-3={self.planar['bound']} ({state} diagnostic bound)")
        return "\n".join(lines) + "\n"
