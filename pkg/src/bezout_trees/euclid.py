"""Extended Euclidean algorithm used as the reference for Bezout coefficients.

The normalization is the textbook recursion

    xgcd(a, 0)  = (a, 1, 0)
    xgcd(a, b)  = (g, y, x - (a // b) * y)   where (g, x, y) = xgcd(b, a % b)

which gives ``xgcd(2, 1) == (1, 0, 1)`` and ``xgcd(3, 2) == (1, 1, -1)``.
The public function runs the equivalent loop; the recursive form is kept
for cross-checking in the tests.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .pair_core import BezoutPair


class GcdResult(NamedTuple):
    g: int
    coeffs: BezoutPair


def extended_gcd(a: int, b: int) -> GcdResult:
    if a < 1 or b < 1:
        raise ValueError(f"extended_gcd needs positive inputs, got ({a},{b})")
    if a < b:
        raise ValueError(f"extended_gcd needs a >= b, got ({a},{b})")
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return GcdResult(old_r, BezoutPair(old_s, old_t))


def extended_gcd_recursive(a: int, b: int) -> tuple[int, int, int]:
    if b == 0:
        return a, 1, 0
    g, x, y = extended_gcd_recursive(b, a % b)
    return g, y, x - (a // b) * y


def extended_gcd_array(a: np.ndarray, b: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Elementwise :func:`extended_gcd` over int64 arrays with ``a >= b >= 1``.

    Returns ``(g, U, V)`` arrays.
    """
    old_r = np.array(a, dtype=np.int64)
    r = np.array(b, dtype=np.int64)
    if old_r.size and (r.min() < 1 or (old_r < r).any()):
        raise ValueError("extended_gcd_array needs a >= b >= 1 elementwise")
    old_s = np.ones_like(old_r)
    s = np.zeros_like(old_r)
    old_t = np.zeros_like(old_r)
    t = np.ones_like(old_r)
    # Coefficients are bounded by the inputs, so no int64 overflow can occur.
    active = np.nonzero(r)[0]
    while active.size:
        ro, rr = old_r[active], r[active]
        q = ro // rr
        old_r[active], r[active] = rr, ro - q * rr
        so, ss = old_s[active], s[active]
        old_s[active], s[active] = ss, so - q * ss
        to, tt = old_t[active], t[active]
        old_t[active], t[active] = tt, to - q * tt
        active = active[r[active] != 0]
    return old_r, old_s, old_t

