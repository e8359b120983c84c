"""Figures written next to the text/JSON reports."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def comparison_figure(report, path) -> None:
    """Differing nodes per level for each tree, log scale."""
    fig, ax = plt.subplots(figsize=(6, 4))
    levels = range(1, report.depth + 1)
    for tally in report.trees:
        counts = [c if c > 0 else float("nan") for c in tally.per_level]
        ax.plot(levels, counts, marker="o", label=f"tree {tally.root}")
    ax.plot(levels, [3 ** (k - 1) for k in levels], ls=":", color="gray", label="3^(level-1)")
    ax.set_yscale("log")
    ax.set_xlabel("level")
    ax.set_ylabel("nodes differing from extended gcd")
    title = "patched" if report.patched else "unpatched"
    ax.set_title(f"Bezout tree vs gcd, depth {report.depth} ({title})")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def bench_figure(report, path) -> None:
    fig, ax = plt.subplots(figsize=(6, 4))
    labels = [f"{r.engine}\n{r.method}" for r in report.rows]
    ax.bar(labels, [r.ns_per_pair for r in report.rows], color="tab:blue")
    ax.set_ylabel("ns per pair")
    ax.set_title(f"Coefficient generation, depth {report.depth}")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
