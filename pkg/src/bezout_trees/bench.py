"""Timing of tree-recursion Bezout coefficients against per-pair extended gcd."""

from __future__ import annotations

import time
from dataclasses import dataclass

from . import forest
from .euclid import extended_gcd, extended_gcd_array

ENGINES = ("numpy", "python")


@dataclass
class BenchRow:
    engine: str
    method: str
    pairs: int
    seconds: float

    @property
    def ns_per_pair(self) -> float:
        return 1e9 * self.seconds / self.pairs


@dataclass
class BenchReport:
    depth: int
    rows: list[BenchRow]

    def ratio(self, engine: str) -> float:
        by = {r.method: r for r in self.rows if r.engine == engine}
        return by["oracle"].seconds / by["tree"].seconds

    def table(self) -> str:
        lines = [f"depth={self.depth}  pairs={self.rows[0].pairs}"]
        lines.append(f"{'engine':<8}{'method':<8}{'seconds':>12}{'ns/pair':>12}")
        for r in self.rows:
            lines.append(f"{r.engine:<8}{r.method:<8}{r.seconds:>12.4f}{r.ns_per_pair:>12.1f}")
        for engine in dict.fromkeys(r.engine for r in self.rows):
            lines.append(f"{engine} oracle/tree ratio: {self.ratio(engine):.2f}")
        return "\n".join(lines)


def _numpy_tree(depth):
    count = 0
    for root in forest.ROOTS:
        for lvl in forest.iter_levels(root, forest.DEFAULT_SEED, depth, include_root=False):
            count += len(lvl)
    return count


def _numpy_oracle(depth):
    count = 0
    for root in forest.ROOTS:
        for lvl in forest.iter_levels(root, forest.DEFAULT_SEED, depth, include_root=False):
            extended_gcd_array(lvl.m, lvl.n)
            count += len(lvl)
    return count


def _python_tree(depth):
    count = 0
    for root in forest.ROOTS:
        for node in forest.enumerate(root, forest.DEFAULT_SEED, depth, include_root=False):
            count += 1
    return count


def _python_oracle(depth):
    count = 0
    for root in forest.ROOTS:
        for node in forest.enumerate(root, forest.DEFAULT_SEED, depth, include_root=False):
            extended_gcd(node.pair.m, node.pair.n)
            count += 1
    return count


_RUNNERS = {
    ("numpy", "tree"): _numpy_tree,
    ("numpy", "oracle"): _numpy_oracle,
    ("python", "tree"): _python_tree,
    ("python", "oracle"): _python_oracle,
}


def bench_generation(depth: int, engines=("numpy",)) -> BenchReport:
    """Time (a) enumeration with recursive Bezout pairs and (b) the same plus extended gcd per node."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    rows = []
    for engine in engines:
        for method in ("tree", "oracle"):
            start = time.perf_counter()
            pairs = _RUNNERS[engine, method](depth)
            rows.append(BenchRow(engine, method, pairs, time.perf_counter() - start))
    return BenchReport(depth, rows)
