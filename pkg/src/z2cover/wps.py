"""Weighted projective 3-space combinatorics.

Everything here is exact lattice counting: the number of weighted-degree-n
monomials in four variables and the derived Euler characteristic
``chi(O(n)) = N(n) - N(-n - W)``, where ``W`` is the weight sum.  The second
term implements Serre duality for the canonical weight ``-W``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm
from typing import Iterable, Iterator

__all__ = ["Weights", "well_formed", "monomial_count", "euler_char_line"]


@dataclass(frozen=True, order=True)
class Weights:
    """Sorted quadruple of positive weights for P(a0, a1, a2, a3)."""

    a: tuple[int, int, int, int]

    def __init__(self, a: Iterable[int]):
        quad = tuple(sorted(a))
        if len(quad) != 4:
            raise ValueError(f"need exactly four weights, got {quad}")
        if any(not isinstance(w, int) or w < 1 for w in quad):
            raise ValueError(f"weights must be positive integers, got {quad}")
        object.__setattr__(self, "a", quad)

    def __iter__(self) -> Iterator[int]:
        return iter(self.a)

    def __str__(self) -> str:
        return "(" + ",".join(str(w) for w in self.a) + ")"

    @property
    def L(self) -> int:
        """lcm of the weights."""
        return lcm(*self.a)

    @property
    def W(self) -> int:
        """Sum of the weights."""
        return sum(self.a)

    @property
    def A(self) -> int:
        """Product of the weights."""
        a = self.a
        return a[0] * a[1] * a[2] * a[3]

    @property
    def well_formed(self) -> bool:
        return well_formed(self.a)


def well_formed(a: Iterable[int]) -> bool:
    """True when every triple of weights is coprime.

    Equivalently: no weight may share a factor with all three others, so the
    space has no quasi-reflections.
    """
    quad = tuple(a)
    if len(quad) != 4:
        raise ValueError("need exactly four weights")
    for skip in range(4):
        triple = [quad[i] for i in range(4) if i != skip]
        if gcd(*triple) != 1:
            return False
    return True


def _progression_count(rem: int, step: int, mod: int) -> int:
    """#{e >= 0 : step*e <= rem and step*e == rem (mod mod)}."""
    if rem < 0:
        return 0
    g = gcd(step, mod)
    if rem % g:
        return 0
    m = mod // g
    # least e with step*e == rem mod `mod`; reduce to a unit inverse mod m
    e0 = (rem // g * pow(step // g, -1, m)) % m if m > 1 else 0
    if step * e0 > rem:
        return 0
    return (rem - step * e0) // (step * m) + 1


def monomial_count(weights: Weights | Iterable[int], n: int) -> int:
    """Number of monomials of weighted degree exactly ``n`` (0 for n < 0).

    Two explicit loops over the largest weights; the exponent of the second
    variable is counted per congruence class, so the cost is governed by
    ``(n/a2) * (n/a3)`` rather than the lattice volume.
    """
    a0, a1, a2, a3 = tuple(weights)
    if n < 0:
        return 0
    total = 0
    for e3 in range(n // a3 + 1):
        r3 = n - e3 * a3
        for e2 in range(r3 // a2 + 1):
            total += _progression_count(r3 - e2 * a2, a1, a0)
    return total


def euler_char_line(weights: Weights | Iterable[int], n: int) -> int:
    """Euler characteristic of O(n) on the weighted projective 3-space."""
    quad = tuple(weights)
    return monomial_count(quad, n) - monomial_count(quad, -n - sum(quad))
