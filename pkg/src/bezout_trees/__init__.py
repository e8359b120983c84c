"""Trinary trees of coprime pairs, their Bezout trees, and wallpaper rendering."""

from .euclid import GcdResult, extended_gcd
from .forest import TreeNode, TreePath, enumerate, find_path, iter_levels, node_count
from .pair_core import (
    BezoutPair,
    Branch,
    CoprimePair,
    PythagoreanTriple,
    TreeOverflowError,
    f_child,
    g_child,
    triple,
    verify_bezout,
)

__all__ = [
    "BezoutPair",
    "Branch",
    "CoprimePair",
    "GcdResult",
    "PythagoreanTriple",
    "TreeNode",
    "TreeOverflowError",
    "TreePath",
    "enumerate",
    "extended_gcd",
    "f_child",
    "find_path",
    "g_child",
    "iter_levels",
    "node_count",
    "triple",
    "verify_bezout",
]
