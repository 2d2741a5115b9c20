import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .kernel import vertex_bound  # noqa: E402

MARKERS = {"theta": "o", "tree_sink": "^", "flower": "s", "random": ".", "path": "x"}


def plot_headroom(rows, path):
    """Kernel size against k, one marker per family, with the 104k^2 - 18k curve."""
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    families = sorted({r.family for r in rows})
    for fam in families:
        pts = [(r.k, r.n_after) for r in rows if r.family == fam and r.n_after is not None]
        if pts:
            xs, ys = zip(*pts)
            ax.scatter(xs, ys, marker=MARKERS.get(fam, "o"), label=fam, alpha=0.7)
        no = [r.k for r in rows if r.family == fam and r.verdict == "No"]
        if no:
            ax.scatter(no, [0] * len(no), marker="|", color="grey")
    ks = sorted({r.k for r in rows})
    if ks:
        ax.plot(ks, [max(vertex_bound(k), 0) for k in ks], "k--", lw=1, label="bound")
    ax.set_xlabel("k")
    ax.set_ylabel("|V| after kernelization")
    ax.set_yscale("symlog")
    if families:
        ax.legend(frameon=False, fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
