"""Level-order enumeration of the two trinary trees and their Bezout trees.

Levels are 0-based: the root is level 0 and its three children are level 1.
Within a level nodes appear in lexicographic path order (A < B < C), so the
k-th node of level L has the base-3 expansion of k (L digits, A=0) as its path.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

import numpy as np

from .pair_core import (
    INT64_MAX,
    BezoutPair,
    Branch,
    CoprimePair,
    TreeOverflowError,
    checked,
    f_child,
)

ROOT_ODD = CoprimePair(3, 1)
ROOT_MIXED = CoprimePair(2, 1)
ROOTS = (ROOT_MIXED, ROOT_ODD)
DEFAULT_SEED = BezoutPair(0, 1)

_LETTERS = "ABC"


@dataclass(frozen=True)
class TreePath:
    root: CoprimePair
    steps: tuple[Branch, ...] = ()

    @property
    def level(self) -> int:
        return len(self.steps)

    @property
    def step_string(self) -> str:
        return "".join(_LETTERS[b] for b in self.steps)

    @property
    def index(self) -> int:
        """Position of the addressed node within its level."""
        k = 0
        for b in self.steps:
            k = 3 * k + int(b)
        return k

    def child(self, b: Branch) -> TreePath:
        return TreePath(self.root, self.steps + (b,))

    def sort_key(self):
        return (self.root.m, self.root.n, self.step_string)

    def __str__(self):
        return f"{self.root}:[{self.step_string}]"

    @classmethod
    def from_index(cls, root: CoprimePair, level: int, index: int) -> TreePath:
        return cls(root, Branch.parse(index_to_steps(level, index)))


def index_to_steps(level: int, index: int) -> str:
    """Base-3 digits of ``index`` padded to ``level`` characters, as A/B/C."""
    digits = []
    for _ in range(level):
        index, r = divmod(index, 3)
        digits.append(_LETTERS[r])
    return "".join(reversed(digits))


@dataclass(frozen=True)
class TreeNode:
    pair: CoprimePair
    bezout: BezoutPair
    level: int
    path: TreePath


def _check_seed(root: CoprimePair, seed: BezoutPair) -> None:
    if root.m * seed.u + root.n * seed.v != 1:
        raise ValueError(f"seed {seed} is not a Bezout pair for root {root}")


def _normalize_overrides(overrides):
    if not overrides:
        return {}
    out = {}
    for key, value in overrides.items():
        steps = key if isinstance(key, str) else "".join(_LETTERS[b] for b in key)
        if not steps:
            raise ValueError("the root is overridden through the seed, not an override")
        Branch.parse(steps)
        out[steps] = value
    return out


def enumerate(
    root: CoprimePair,
    seed: BezoutPair = DEFAULT_SEED,
    max_level: int = 1,
    include_root: bool = True,
    overrides: Mapping[str, BezoutPair] | None = None,
) -> Iterator[TreeNode]:
    """Yield the nodes of the tree rooted at ``root`` in canonical level order.

    ``overrides`` maps a path string (e.g. ``"A"``) to a replacement Bezout
    pair; the recursion continues from the replaced value below that node.
    """
    if max_level < 0:
        raise ValueError("max_level must be >= 0")
    _check_seed(root, seed)
    overrides = _normalize_overrides(overrides)
    if include_root:
        yield TreeNode(root, seed, 0, TreePath(root))
    # One level of raw tuples is retained; nodes are materialized as yielded.
    level = [("", root.m, root.n, seed.u, seed.v)]
    for depth in range(1, max_level + 1):
        nxt = []
        for steps, m, n, u, v in level:
            if max(abs(m), abs(n), abs(u), abs(v)) > INT64_MAX // 3:
                raise TreeOverflowError(
                    f"64-bit overflow below node {root}:[{steps}] at level {depth - 1}"
                )
            for label, cm, cn, cu, cv in (
                ("A", 2 * m - n, m, -v, u + 2 * v),
                ("B", 2 * m + n, m, v, u - 2 * v),
                ("C", 2 * n + m, n, u, v - 2 * u),
            ):
                path = steps + label
                if path in overrides:
                    q = overrides[path]
                    cu, cv = q.u, q.v
                nxt.append((path, cm, cn, cu, cv))
        for path, cm, cn, cu, cv in nxt:
            yield TreeNode(
                CoprimePair(cm, cn),
                BezoutPair(cu, cv),
                depth,
                TreePath(root, Branch.parse(path)),
            )
        level = nxt


@dataclass
class Level:
    """One tree level as parallel int64 arrays in canonical path order."""

    root: CoprimePair
    level: int
    m: np.ndarray
    n: np.ndarray
    u: np.ndarray
    v: np.ndarray

    def __len__(self):
        return len(self.m)

    def path(self, index: int) -> TreePath:
        return TreePath.from_index(self.root, self.level, index)


_SAFE = INT64_MAX // 3


def iter_levels(
    root: CoprimePair,
    seed: BezoutPair = DEFAULT_SEED,
    max_level: int = 1,
    include_root: bool = True,
    overrides: Mapping[str, BezoutPair] | None = None,
) -> Iterator[Level]:
    """Vectorized counterpart of :func:`enumerate`, one :class:`Level` at a time."""
    if max_level < 0:
        raise ValueError("max_level must be >= 0")
    _check_seed(root, seed)
    overrides = _normalize_overrides(overrides)
    cur = Level(
        root,
        0,
        np.array([root.m], dtype=np.int64),
        np.array([root.n], dtype=np.int64),
        np.array([seed.u], dtype=np.int64),
        np.array([seed.v], dtype=np.int64),
    )
    if include_root:
        yield cur
    for depth in range(1, max_level + 1):
        m, n, u, v = cur.m, cur.n, cur.u, cur.v
        big = np.maximum(np.maximum(np.abs(m), np.abs(n)), np.maximum(np.abs(u), np.abs(v)))
        if big.max() > _SAFE:
            where = cur.path(int(np.argmax(big > _SAFE)))
            raise TreeOverflowError(f"64-bit overflow below node {where} at level {depth - 1}")
        # Column order A, B, C then row-major flatten keeps lexicographic order.
        cm = np.stack([2 * m - n, 2 * m + n, 2 * n + m], axis=1).ravel()
        cn = np.stack([m, m, n], axis=1).ravel()
        cu = np.stack([-v, v, u], axis=1).ravel()
        cv = np.stack([u + 2 * v, u - 2 * v, v - 2 * u], axis=1).ravel()
        for steps, q in overrides.items():
            if len(steps) == depth:
                k = TreePath(root, Branch.parse(steps)).index
                cu[k], cv[k] = q.u, q.v
        cur = Level(root, depth, cm, cn, cu, cv)
        yield cur


def node_count(max_level: int, include_root: bool = False, tree_count: int = 1) -> int:
    if max_level < 0 or tree_count < 1:
        raise ValueError("need max_level >= 0 and tree_count >= 1")
    per_tree = (3 ** (max_level + 1) - 3) // 2 + (1 if include_root else 0)
    return checked(tree_count * per_tree, f"node_count({max_level})")


def parent_step(p: int, q: int) -> tuple[int, int, Branch]:
    """Invert one application of the child recursion on a non-root pair."""
    if q < p < 2 * q:
        return q, 2 * q - p, Branch.A
    if 2 * q < p < 3 * q:
        return q, p - 2 * q, Branch.B
    if p > 3 * q:
        return p - 2 * q, q, Branch.C
    raise ValueError(f"({p},{q}) has no parent in either tree")


def find_path(p: CoprimePair) -> TreePath:
    m, n = p.m, p.n
    steps: list[Branch] = []
    while (m, n) not in ((2, 1), (3, 1)):
        if m == 2 * n or m == 3 * n:
            raise ValueError(f"{p} is not coprime: reduced to ({m},{n})")
        m, n, b = parent_step(m, n)
        steps.append(b)
    root = ROOT_MIXED if (m, n) == (2, 1) else ROOT_ODD
    return TreePath(root, tuple(reversed(steps)))


def follow(path: TreePath) -> CoprimePair:
    p = path.root
    for b in path.steps:
        p = f_child(p, b)
    return p
