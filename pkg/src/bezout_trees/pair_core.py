"""Coprime pairs, Bezout pairs and the one-step child recursions.

Every node of a trinary tree has three children.  Branch ``A`` feeds the
minus-associated pair ``(m, -n)`` into the doubling map, ``B`` the pair
itself and ``C`` the swapped pair ``(n, m)``.  The Bezout coefficients are
carried along by the companion map so that ``m*u + n*v == 1`` holds at
every node.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


class TreeOverflowError(ArithmeticError):
    """An intermediate value left the signed 64-bit range."""


def checked(value: int, context: object = None) -> int:
    if value < INT64_MIN or value > INT64_MAX:
        where = f" at {context}" if context is not None else ""
        raise TreeOverflowError(f"64-bit overflow{where}: {value}")
    return value


class Branch(enum.IntEnum):
    """Child label; the integer value is the canonical sort order."""

    A = 0  # (m, -n) / (u, -v)
    B = 1  # (m, n)  / (u, v)
    C = 2  # (n, m)  / (v, u)

    @classmethod
    def parse(cls, text: str) -> tuple[Branch, ...]:
        try:
            return tuple(cls[ch] for ch in text)
        except KeyError as exc:
            raise ValueError(f"invalid branch label in {text!r}") from exc


@dataclass(frozen=True, order=True)
class CoprimePair:
    m: int
    n: int

    def __post_init__(self):
        checked(self.m, self)
        checked(self.n, self)
        if not self.m > self.n >= 1:
            raise ValueError(f"pair must satisfy m > n >= 1, got ({self.m},{self.n})")

    def __str__(self):
        return f"({self.m},{self.n})"

    @property
    def both_odd(self) -> bool:
        return self.m % 2 == 1 and self.n % 2 == 1


@dataclass(frozen=True)
class BezoutPair:
    u: int
    v: int

    def __post_init__(self):
        checked(self.u, self)
        checked(self.v, self)

    def __str__(self):
        return f"({self.u},{self.v})"


@dataclass(frozen=True)
class PythagoreanTriple:
    x: int
    y: int
    z: int

    def is_pythagorean(self) -> bool:
        return self.x * self.x + self.y * self.y == self.z * self.z


def f_child(p: CoprimePair, b: Branch) -> CoprimePair:
    m, n = p.m, p.n
    if b is Branch.A:
        first, second = 2 * m - n, m
    elif b is Branch.B:
        first, second = 2 * m + n, m
    else:
        first, second = 2 * n + m, n
    return CoprimePair(checked(first, p), second)


def g_child(q: BezoutPair, b: Branch) -> BezoutPair:
    u, v = q.u, q.v
    if b is Branch.A:
        return BezoutPair(-v, checked(u + 2 * v, q))
    if b is Branch.B:
        return BezoutPair(v, checked(u - 2 * v, q))
    return BezoutPair(u, checked(v - 2 * u, q))


def triple(p: CoprimePair) -> PythagoreanTriple:
    """Pythagorean triple ``(m^2 - n^2, 2mn, m^2 + n^2)`` generated by ``p``."""
    m2 = checked(p.m * p.m, p)
    n2 = checked(p.n * p.n, p)
    return PythagoreanTriple(m2 - n2, checked(2 * p.m * p.n, p), checked(m2 + n2, p))


def verify_bezout(p: CoprimePair, q: BezoutPair) -> bool:
    mu = checked(p.m * q.u, p)
    nv = checked(p.n * q.v, p)
    return checked(mu + nv, p) == 1
