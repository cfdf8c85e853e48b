"""Figure rendering for CLI report paths.

Every figure lands next to the delimited output it illustrates; rendering is
headless (Agg) and deterministic.  Exact rationals are converted to floats
here and only here, strictly for display.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

plt.rcParams["figure.figsize"] = (6.0, 4.0)
plt.rcParams["font.size"] = 9
plt.rcParams["axes.grid"] = True
plt.rcParams["grid.alpha"] = 0.3


def _save(fig, path):
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def configuration_figure(cfg, path):
    """Scatter of a configuration: native axes for d <= 3, first two
    coordinates otherwise."""
    xs = [float(p[0]) for p in cfg.points]
    if cfg.dim == 1:
        ys = [0.0] * len(cfg.points)
    else:
        ys = [float(p[1]) for p in cfg.points]
    if cfg.dim == 3:
        fig = plt.figure()
        ax = fig.add_subplot(projection="3d")
        zs = [float(p[2]) for p in cfg.points]
        ax.scatter(xs, ys, zs, c="tab:blue")
        for x, y, z, lab in zip(xs, ys, zs, cfg.labels):
            ax.text(x, y, z, lab, fontsize=7)
    else:
        fig, ax = plt.subplots()
        ax.scatter(xs, ys, c="tab:blue")
        for x, y, lab in zip(xs, ys, cfg.labels):
            ax.annotate(lab, (x, y), fontsize=7,
                        textcoords="offset points", xytext=(3, 3))
        if cfg.dim > 2:
            ax.set_title(f"first two of {cfg.dim} coordinates")
    _save(fig, path)


def diagram_figure(points, colors, path):
    """Affine Gale diagram: white points as open circles, black as filled."""
    if not points or len(points[0]) == 0:
        return False
    dim = len(points[0])
    if dim == 1:
        coords = [(float(p[0]), 0.0) for p in points]
    else:
        coords = [(float(p[0]), float(p[1])) for p in points]
    fig, ax = plt.subplots()
    for (x, y), color in zip(coords, colors):
        if color == "white":
            ax.scatter([x], [y], facecolors="none", edgecolors="black")
        else:
            ax.scatter([x], [y], c="black")
    if dim > 2:
        ax.set_title(f"first two of {dim} diagram coordinates")
    _save(fig, path)
    return True


def facet_stats_figure(e_facets, k_sets, path):
    """Side-by-side bars of the facet and k-set vectors."""
    fig, (ax1, ax2) = plt.subplots(1, 2)
    ax1.bar(range(len(e_facets)), e_facets, color="tab:blue")
    ax1.set_xlabel("j")
    ax1.set_ylabel("E_j")
    ax2.bar(range(1, len(k_sets) + 1), k_sets, color="tab:orange")
    ax2.set_xlabel("k")
    ax2.set_ylabel("e_k")
    _save(fig, path)


def margins_figure(counts, bounds, label, path):
    """Per-trial counts against their required lower bounds."""
    fig, ax = plt.subplots()
    idx = range(len(counts))
    ax.plot(idx, counts, "o", ms=3, label=label)
    ax.plot(idx, bounds, "r--", lw=1, label="required bound")
    ax.set_xlabel("trial")
    ax.legend()
    _save(fig, path)


def witness_figure(report, path):
    """Emitted pair count against the guaranteed lower bound."""
    fig, ax = plt.subplots()
    names = ["pairs", "bound"]
    values = [len(report.pairs), report.guaranteed_lower_bound]
    bars = ax.bar(names, values, color=["tab:green", "tab:red"])
    for rect, val in zip(bars, values):
        ax.text(rect.get_x() + rect.get_width() / 2, rect.get_height(),
                str(val), ha="center", va="bottom")
    title = f"{report.regime} d={report.dimension}"
    if report.degenerate_extension:
        title += " (degenerate extension: bound not claimed)"
    ax.set_title(title)
    _save(fig, path)
