"""Exact numerical invariants of covers and their Chern-ratio geography.

The cover-level quantities (canonical volume, holomorphic and topological
Euler characteristics) are computed from branch data by closed formulas over
the strata of the branch configuration.  The geography side works with the
normalized ratio vector ``r = d / sum(d)`` and studies the exact rational
coordinates

    x = c1 c2 / c3-like ratio   y = volume ratio   SCI = y(3x + 1) - 4

in the limit of large branch degree; everything is Fraction arithmetic, no
floats anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cover import CoverSpec, eigensheaf_degrees, half_point_count, hurwitz_degree, is_flat
from .gf2 import dot
from .walsh import NonIntegralError
from .wps import euler_char_line

__all__ = [
    "SCI_MAX",
    "SCI_MIN",
    "Y_MIN",
    "volume",
    "holomorphic_euler",
    "topological_euler",
    "InvariantReport",
    "invariant_report",
    "RatioVector",
    "vertex_ratio",
    "barycenter_ratio",
    "GeographyPoint",
    "geography_point",
    "hunt_scan",
]

# proven range of the index SCI over the whole simplex, and the floor of y;
# the ceiling of y is the barycenter value, which depends on the rank
SCI_MIN = Fraction(-1, 2)
SCI_MAX = Fraction(8, 3)
Y_MIN = Fraction(1, 2)


def volume(spec: CoverSpec) -> Fraction:
    """Self-intersection ``K^3`` of the canonical class of the cover."""
    excess = hurwitz_degree(spec)
    return Fraction(1 << spec.branch.s, spec.weights.A) * excess**3


def holomorphic_euler(spec: CoverSpec) -> int:
    """``chi(O)`` of the cover: one line-bundle term per character."""
    degrees = eigensheaf_degrees(spec.branch)
    return sum(euler_char_line(spec.weights, -lv) for lv in degrees.l)


def topological_euler(spec: CoverSpec) -> tuple[Fraction, bool]:
    """Topological Euler number with inclusion-exclusion over branch strata.

    Returns ``(value, exact)``; the stratum formulas assume the generic
    member of each linear system, and the count is certified exact only on
    the straight projective space (all weights 1).  Zero-sum triples are
    excluded from the triple stratum: those intersections sit over the
    4-fold points of the configuration and do not move the Euler number.
    """
    d = spec.branch.d
    s = spec.branch.s
    n = len(d)
    a = spec.weights.a
    A = spec.weights.A
    W = spec.weights.W
    sigma2 = sum(a[i] * a[j] for i in range(4) for j in range(i + 1, 4))
    singles = sum(Fraction(dp * (dp * dp - dp * W + sigma2), A) for dp in d if dp)
    pairs = Fraction(0)
    triples = Fraction(0)
    for p in range(1, n):
        if not d[p]:
            continue
        for q in range(p + 1, n):
            if not d[q]:
                continue
            pairs += Fraction(d[p] * d[q] * (W - d[p] - d[q]), A)
            for r in range(q + 1, n):
                if d[r] and p ^ q ^ r != 0:
                    triples += Fraction(d[p] * d[q] * d[r], A)
    e = (
        Fraction(4 << s)
        - Fraction(1 << s, 2) * singles
        + Fraction(1 << s, 4) * pairs
        - Fraction(1 << s, 8) * triples
    )
    return e, a == (1, 1, 1, 1)


@dataclass(frozen=True)
class InvariantReport:
    k3: Fraction
    chi: int
    euler: Fraction
    euler_exact: bool
    hurwitz: Fraction
    half_points: int | None
    flat: bool
    x: Fraction | None
    y: Fraction | None
    sci: Fraction | None


def invariant_report(spec: CoverSpec) -> InvariantReport:
    """All invariants of one cover, plus its limit-geography coordinates.

    ``x = e / (24 chi)`` and ``y = -K^3 / (24 chi)`` are reported when
    ``chi`` is nonzero; they converge to the ratio-vector geography of
    ``d / sum(d)`` as the branch degrees grow.
    """
    k3 = volume(spec)
    chi = holomorphic_euler(spec)
    e, exact = topological_euler(spec)
    try:
        half = half_point_count(spec)
    except NonIntegralError:
        half = None
    x = y = sci = None
    if chi:
        x = e / (24 * chi)
        y = -k3 / (24 * chi)
        sci = y * (3 * x + 1) - 4
    return InvariantReport(
        k3=k3,
        chi=chi,
        euler=e,
        euler_exact=exact,
        hurwitz=hurwitz_degree(spec),
        half_points=half,
        flat=is_flat(spec),
        x=x,
        y=y,
        sci=sci,
    )


@dataclass(frozen=True)
class RatioVector:
    """Point of the branch-ratio simplex: ``r >= 0``, ``r[0] = 0``, sum 1."""

    s: int
    r: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.r) != 1 << self.s:
            raise ValueError("ratio vector length must be 2**s")
        if self.r[0] != 0:
            raise ValueError("the identity ratio must be 0")
        if any(v < 0 for v in self.r):
            raise ValueError("ratios must be nonnegative")
        if sum(self.r) != 1:
            raise ValueError("ratios must sum to 1")


def vertex_ratio(s: int, g: int = 1) -> RatioVector:
    if not 0 < g < 1 << s:
        raise ValueError("vertex must be a nonzero group element")
    r = [Fraction(0)] * (1 << s)
    r[g] = Fraction(1)
    return RatioVector(s, tuple(r))


def barycenter_ratio(s: int) -> RatioVector:
    n = 1 << s
    r = [Fraction(1, n - 1)] * n
    r[0] = Fraction(0)
    return RatioVector(s, tuple(r))


@dataclass(frozen=True)
class GeographyPoint:
    s: int
    a: Fraction  # cubic moment  sum r^3
    b: Fraction  # quadratic moment  sum r^2
    zero_sum_triples: Fraction  # ordered distinct zero-sum triple sum
    q: Fraction  # sum over characters of (hyperplane mass)^3
    phi: Fraction
    x: Fraction
    y: Fraction
    sci: Fraction


def geography_point(ratio: RatioVector) -> GeographyPoint:
    """Limit Chern-ratio coordinates of a branch-ratio vector.

    ``phi`` is computed both from the character sums and from the moment
    identity ``phi = 3b - T + 1``; disagreement would mean an arithmetic
    bug, so it is asserted.
    """
    s, r = ratio.s, ratio.r
    n = 1 << s
    a = sum(v**3 for v in r)
    b = sum(v**2 for v in r)
    t3 = Fraction(0)
    for p in range(1, n):
        if not r[p]:
            continue
        for qi in range(p + 1, n):
            rr = p ^ qi
            if rr > qi and r[qi] and r[rr]:
                t3 += r[p] * r[qi] * r[rr]
    t3 *= 6  # ordered count of distinct zero-sum triples
    q = Fraction(0)
    for chi in range(1, n):
        mass = sum(r[g] for g in range(1, n) if dot(chi, g))
        q += mass**3
    phi = Fraction(8, n) * q
    assert phi == 3 * b - t3 + 1, "moment identity failed"
    y = 2 / phi
    x = (14 * a + 6 * b + phi) / (3 * phi)
    sci = y * (3 * x + 1) - 4
    return GeographyPoint(s=s, a=a, b=b, zero_sum_triples=t3, q=q, phi=phi, x=x, y=y, sci=sci)


def hunt_scan(s: int, t: Fraction | int) -> tuple[Fraction, GeographyPoint]:
    """Scan point of the almost-uniform family concentrated near one vertex.

    The family puts mass ``t`` on a base point and spreads ``1 - t`` evenly
    over the rest of one affine hyperplane, which kills every zero-sum
    triple.  Returns ``(F, point)`` where ``F = 7a - 9b^2``; on this family
    ``SCI = 4F / phi^2``, so a positive ``F`` certifies a positive index.
    The interesting window is ``1/2 <= t <= 17/25``; any ``0 < t <= 1`` is
    accepted (``t = 1`` is the vertex itself).
    """
    if s < 3:
        raise ValueError("the scan family needs rank >= 3")
    t = Fraction(t)
    if not 0 < t <= 1:
        raise ValueError(f"mass {t} outside (0, 1]")
    n = 1 << s
    support = [g for g in range(1, n) if dot(1, g)]
    rest = Fraction(1 - t, len(support) - 1) if t != 1 else Fraction(0)
    r = [Fraction(0)] * n
    for g in support:
        r[g] = rest
    r[1] = t
    point = geography_point(RatioVector(s, tuple(r)))
    assert point.zero_sum_triples == 0
    f = 7 * point.a - 9 * point.b**2
    assert 4 * f == point.sci * point.phi**2
    return f, point
