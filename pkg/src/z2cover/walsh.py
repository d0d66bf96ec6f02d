"""Unnormalized Walsh-Hadamard transforms of integer group functions.

``forward`` computes ``S(chi) = sum_x d(x) * (-1)^(chi.x)`` with the usual
in-place butterfly; ``forward_naive`` is the quadratic definition kept as an
oracle.  ``inverse`` divides the same butterfly by ``2**s`` and insists on an
integral result, which is what makes it usable as a pruning certificate when
reconstructing branch data from a prescribed spectrum.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .gf2 import dot

__all__ = [
    "NonIntegralError",
    "forward",
    "forward_naive",
    "inverse",
    "degrees_from_spectrum",
    "triple_convolution_at_zero",
]


class NonIntegralError(ArithmeticError):
    """An exact integer was required but division left a remainder.

    ``element`` identifies the offending group element or character when the
    caller supplied one.
    """

    def __init__(self, message: str, element: int | None = None):
        super().__init__(message)
        self.element = element


def _rank(n: int) -> int:
    s = n.bit_length() - 1
    if n <= 0 or n != 1 << s:
        raise ValueError(f"length {n} is not a power of two")
    return s


def forward(d: Sequence[int]) -> list[int]:
    """Spectrum of ``d``; entry ``chi`` is the signed sum over the group."""
    s = _rank(len(d))
    out = list(d)
    h = 1
    for _ in range(s):
        for start in range(0, len(out), h * 2):
            for i in range(start, start + h):
                a, b = out[i], out[i + h]
                out[i], out[i + h] = a + b, a - b
        h *= 2
    return out


def forward_naive(d: Sequence[int]) -> list[int]:
    n = len(d)
    _rank(n)
    return [sum(v if not dot(chi, x) else -v for x, v in enumerate(d)) for chi in range(n)]


def inverse(spectrum: Sequence[int]) -> list[int]:
    """Unique ``d`` with ``forward(d) == spectrum``, or NonIntegralError.

    The butterfly is an involution up to the factor ``2**s``; any entry not
    divisible by it certifies that no integer function has this spectrum.
    """
    n = len(spectrum)
    back = forward(spectrum)
    for x, value in enumerate(back):
        if value % n:
            raise NonIntegralError(
                f"spectrum inverts to {Fraction(value, n)} at element {x}", element=x
            )
    return [value // n for value in back]


def degrees_from_spectrum(spectrum: Sequence[int]) -> list[Fraction]:
    """Affine half-sums ``(S(0) - S(chi)) / 4`` for every character.

    Rational values are reported as-is; rejecting them is the caller's
    decision.  Entry 0 is always 0.
    """
    _rank(len(spectrum))
    s0 = spectrum[0]
    return [Fraction(s0 - sc, 4) for sc in spectrum]


def triple_convolution_at_zero(spectrum: Sequence[int]) -> Fraction:
    """``2^-s * sum(S^3)``, the triple self-convolution at the origin.

    For the spectrum of a nonnegative function this counts weighted
    zero-sum triples, so a negative or fractional value prunes the
    candidate spectrum.
    """
    n = len(spectrum)
    _rank(n)
    return Fraction(sum(v**3 for v in spectrum), n)
