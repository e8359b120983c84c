"""Compare the Bezout trees seeded at (0,1) against the extended-gcd oracle.

Both trees are walked level by level as numpy arrays; each node's tree
coefficients are checked against :func:`extended_gcd_array`.  The patched
run replaces the branch-A child of (2,1), i.e. the pair (3,2), whose tree
value (-1,2) differs from the oracle's (1,-1).
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction

import numpy as np

from .euclid import extended_gcd_array
from .forest import DEFAULT_SEED, ROOT_MIXED, ROOT_ODD, ROOTS, TreePath, iter_levels, node_count
from .pair_core import BezoutPair, Branch

PATCH_PATH = "A"
PATCH_VALUE = BezoutPair(1, -1)
SAMPLE_CAP = 100


@dataclass
class DiffSummary:
    kind: str  # "empty" | "subtree" | "scattered"
    subtree: str | None = None
    samples: list[str] = field(default_factory=list)

    def describe(self) -> str:
        if self.kind == "empty":
            return "empty"
        if self.kind == "subtree":
            return f"exactly the subtree rooted at {self.subtree}"
        return "scattered"


@dataclass
class TreeTally:
    root: str
    total: int = 0
    differed: int = 0
    per_level: list[int] = field(default_factory=list)


@dataclass
class ComparisonReport:
    depth: int
    total_nodes: int
    matched: int
    differed: int
    differed_fraction: Fraction
    differing_paths_summary: DiffSummary
    patched: bool
    patched_matched: int
    patched_differed: int
    trees: list[TreeTally] = field(default_factory=list)

    def to_json(self) -> str:
        doc = asdict(self)
        frac = self.differed_fraction
        doc["differed_fraction"] = {
            "numerator": frac.numerator,
            "denominator": frac.denominator,
            "text": f"{frac.numerator}/{frac.denominator}",
        }
        doc["differing_paths_summary"]["description"] = self.differing_paths_summary.describe()
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _scan(depth: int, overrides) -> tuple[list[TreeTally], dict]:
    """Tally differences per tree; returns tallies and per-(root, level) sorted diff indices."""
    tallies = []
    diffs: dict[tuple[tuple[int, int], int], np.ndarray] = {}
    for root in ROOTS:
        tally = TreeTally(str(root))
        tree_overrides = overrides if root == ROOT_MIXED else None
        for lvl in iter_levels(root, DEFAULT_SEED, depth, include_root=False, overrides=tree_overrides):
            _, big_u, big_v = extended_gcd_array(lvl.m, lvl.n)
            bad = np.nonzero((lvl.u != big_u) | (lvl.v != big_v))[0]
            tally.total += len(lvl)
            tally.differed += int(bad.size)
            tally.per_level.append(int(bad.size))
            if bad.size:
                diffs[(root.m, root.n), lvl.level] = bad
        tallies.append(tally)
    return tallies, diffs


def _summarize(depth: int, diffs: dict) -> DiffSummary:
    if not diffs:
        return DiffSummary("empty")
    samples = []
    for (rootkey, level), idx in diffs.items():
        root = ROOT_MIXED if rootkey == (2, 1) else ROOT_ODD
        samples.extend(TreePath.from_index(root, level, int(k)) for k in idx[:SAMPLE_CAP])
    samples.sort(key=TreePath.sort_key)
    sample_text = [str(p) for p in samples[:SAMPLE_CAP]]

    roots_hit = {rk for rk, _ in diffs}
    if len(roots_hit) == 1:
        (rootkey,) = roots_hit
        top = min(level for rk, level in diffs)
        top_idx = diffs[rootkey, top]
        if top_idx.size == 1:
            k0 = int(top_idx[0])
            exact = True
            for level in range(top, depth + 1):
                span = 3 ** (level - top)
                got = diffs.get((rootkey, level))
                want_lo, want_hi = k0 * span, (k0 + 1) * span
                if got is None or got.size != span or got[0] != want_lo or got[-1] != want_hi - 1:
                    exact = False
                    break
            if exact:
                root = ROOT_MIXED if rootkey == (2, 1) else ROOT_ODD
                where = TreePath.from_index(root, top, k0)
                return DiffSummary("subtree", str(where), sample_text)
    return DiffSummary("scattered", None, sample_text)


def compare_forest(depth: int, patch: bool = False) -> ComparisonReport:
    """Run the tree-versus-oracle comparison over levels 1..depth of both trees.

    The headline counts describe the run selected by ``patch``; the
    ``patched_*`` fields always describe the patched run.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    patch_overrides = {PATCH_PATH: PATCH_VALUE}
    plain_tallies, plain_diffs = _scan(depth, None)
    patched_tallies, patched_diffs = _scan(depth, patch_overrides)

    tallies, diffs = (patched_tallies, patched_diffs) if patch else (plain_tallies, plain_diffs)
    total = sum(t.total for t in tallies)
    assert total == node_count(depth, False, 2)
    differed = sum(t.differed for t in tallies)
    patched_differed = sum(t.differed for t in patched_tallies)
    return ComparisonReport(
        depth=depth,
        total_nodes=total,
        matched=total - differed,
        differed=differed,
        differed_fraction=Fraction(differed, total),
        differing_paths_summary=_summarize(depth, diffs),
        patched=patch,
        patched_matched=total - patched_differed,
        patched_differed=patched_differed,
        trees=tallies,
    )


def expected_subtree() -> str:
    return str(TreePath(ROOT_MIXED, (Branch.A,)))


def conjecture_holds(report: ComparisonReport) -> bool:
    """Whether the report shows the conjectured pattern under its patch setting."""
    if report.patched:
        return report.differed == 0
    odd_tree = next(t for t in report.trees if t.root == str(ROOT_ODD))
    summary = report.differing_paths_summary
    return (
        odd_tree.differed == 0
        and summary.kind == "subtree"
        and summary.subtree == expected_subtree()
        and report.differed == (3**report.depth - 1) // 2
        and report.differed_fraction == Fraction(1, 6)
    )
