"""Deformation criteria and generators for the example cover families.

A cover whose branch degrees stay strictly below the eigensheaf degree of
every character vanishing on them deforms only to abelian covers of the
same kind of base; together with positive total branching and pairwise
coprime weights this pins the cover to its own family.  Quasi-smoothness
of the branch divisors is a genericity hypothesis we flag but cannot
check numerically, and likewise stability is only backed by the degree
proxy, never verified geometrically.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd

from .cover import BranchData, CoverSpec, eigensheaf_degrees
from .gf2 import affine_hyperplane_min_intersection, dot
from .wps import Weights, monomial_count

__all__ = [
    "DeformationReport",
    "UnboundedFamily",
    "deformation_criteria",
    "gen_new_component",
    "gen_unbounded",
    "hyperplane_config_check",
]

STABILITY_NOTE = "stable by pair criterion, not verified"


@dataclass(frozen=True)
class DeformationReport:
    """Outcome of the numeric rigidity conditions for one cover."""

    pairwise_ok: bool
    failing_pairs: tuple[tuple[int, int], ...]
    total_degree_ok: bool
    weights_coprime: bool
    genericity_assumed: bool
    messages: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return self.pairwise_ok and self.total_degree_ok and self.weights_coprime


def _failing_pairs(s: int, d, l) -> list[tuple[int, int]]:
    """Pairs (g, chi), chi vanishing on g, where d(g) >= l(chi)."""
    n = 1 << s
    out = []
    for chi in range(1, n):
        bound = l[chi]
        for g in range(1, n):
            if d[g] >= bound and not dot(chi, g):
                out.append((g, chi))
    return out


def deformation_criteria(spec: CoverSpec) -> DeformationReport:
    s = spec.branch.s
    l = eigensheaf_degrees(spec.branch).l
    failing = tuple(_failing_pairs(s, spec.branch.d, l))
    total_ok = spec.branch.total > 2 * spec.weights.W
    coprime = all(gcd(a, b) == 1 for a, b in combinations(spec.weights, 2))
    messages = []
    for g, chi in failing:
        messages.append(
            f"branch degree {spec.branch.d[g]} at {g:0{s}b} reaches the"
            f" eigensheaf degree {l[chi]} of character {chi:0{s}b}"
        )
    if not total_ok:
        messages.append("total branch degree does not exceed twice the weight sum")
    if not coprime:
        messages.append("weights are not pairwise coprime")
    messages.append(STABILITY_NOTE)
    return DeformationReport(
        pairwise_ok=not failing,
        failing_pairs=failing,
        total_degree_ok=total_ok,
        weights_coprime=coprime,
        genericity_assumed=True,
        messages=tuple(messages),
    )


def hyperplane_config_check(s: int, weights, subspace_dim: int | None = None) -> bool:
    """Whether a hyperplane-arrangement branch locus fits these weights.

    Without ``subspace_dim`` the branch carries one hyperplane for every
    nonzero group element and the weight sum must stay under
    ``(2^s - 1)/2``; with it, the hyperplanes sit off a coordinate
    subspace of that dimension and the bound tightens to
    ``(2^s - 2^dim)/2``.  Either way every affine hyperplane of the group
    avoiding 0 must meet the support in at least 4 points.
    """
    w = weights if isinstance(weights, Weights) else Weights(weights)
    if subspace_dim is None:
        if s < 3:
            raise ValueError("full arrangement needs rank >= 3")
        support = list(range(1, 1 << s))
        cap = (1 << s) - 1
    else:
        if s < 4:
            raise ValueError("off-subspace arrangement needs rank >= 4")
        if not 2 <= subspace_dim < s:
            raise ValueError(f"subspace dimension must be in 2..{s - 1}, got {subspace_dim}")
        support = [g for g in range(1, 1 << s) if g >> subspace_dim]
        cap = (1 << s) - (1 << subspace_dim)
    if 2 * w.W >= cap:
        return False
    return affine_hyperplane_min_intersection(support, s) >= 4


def gen_new_component(M: int) -> CoverSpec:
    """Branch data on P(1,1,1,M) rigid inside the abelian-cover locus.

    One divisor of degree 2, fourteen of degree M.  Eigensheaf degrees
    come out as ``1 + 7M/2`` and ``4M``, never both multiples of M, so
    the cover is not flat, yet it passes every deformation criterion.
    """
    if M % 2 or M <= 2:
        raise ValueError(f"M must be an even integer > 2, got {M}")
    d = [M] * 16
    d[0] = 0
    d[1] = 2
    return CoverSpec(weights=Weights((1, 1, 1, M)), branch=BranchData(4, tuple(d)))


@dataclass(frozen=True)
class UnboundedFamily:
    """One member of the unbounded pluricanonical families on P(1,1,L,L).

    The branch degrees are constant (``height``) on the affine hyperplane
    ``chi0 . g = 1`` and zero elsewhere, so everything about the cover has
    a closed form and members stay cheap even at ranks where the dense
    degree table would not fit in memory.
    """

    kind: str
    s: int
    m: int
    weights: Weights
    chi0: int
    height: int
    l_on: int
    l_off: int
    total: int
    M: int
    flat: bool

    @property
    def L(self) -> int:
        return self.weights.L

    @property
    def p_m(self) -> int:
        return monomial_count(self.weights, self.M)

    def degree(self, g: int) -> int:
        return self.height if dot(self.chi0, g) and g else 0

    def eigensheaf_degree(self, chi: int) -> int:
        if not chi:
            return 0
        return self.l_on if chi == self.chi0 else self.l_off

    def cover_spec(self) -> CoverSpec:
        """Materialize the dense degree table; only sane for small rank."""
        d = tuple(self.degree(g) for g in range(1 << self.s))
        return CoverSpec(weights=self.weights, branch=BranchData(self.s, d))


def gen_unbounded(s: int, kind: str) -> UnboundedFamily:
    """The rank-s member of the canonical or bicanonical unbounded family.

    canonical (m=1): L = (2^s - 4)/6 with degree 2 for even s >= 4,
    L = (2^{s-1} - 4)/6 with degree 1 for odd s >= 5.  bicanonical
    (m=2): s >= 3, degree t minimal with 5 | t*2^{s-1} - 4 and L >= 1,
    L = (t*2^{s-1} - 4)/5.  Both put M = L with every eigensheaf degree
    strictly larger, so the m-th system is a flat multiple of the base.
    """
    if kind == "canonical":
        m = 1
        if s >= 4 and s % 2 == 0:
            height = 2
            num = (1 << s) - 4
        elif s >= 5 and s % 2:
            height = 1
            num = (1 << (s - 1)) - 4
        else:
            raise ValueError(f"canonical family needs even s >= 4 or odd s >= 5, got {s}")
        L, r = divmod(num, 6)
    elif kind == "bicanonical":
        m = 2
        if s < 3:
            raise ValueError(f"bicanonical family needs s >= 3, got {s}")
        height = 4 * pow(pow(2, s - 1, 5), -1, 5) % 5
        if (height << (s - 1)) <= 4:
            height += 5
        L, r = divmod((height << (s - 1)) - 4, 5)
    else:
        raise ValueError(f"kind must be canonical or bicanonical, got {kind!r}")
    assert r == 0 and L >= 1, "family parameter fell outside its proven window"
    l_on = height << (s - 2)
    l_off = height << (s - 3)
    return UnboundedFamily(
        kind=kind,
        s=s,
        m=m,
        weights=Weights((1, 1, L, L)),
        chi0=1,
        height=height,
        l_on=l_on,
        l_off=l_off,
        total=height << (s - 1),
        M=L,
        flat=l_on % L == 0 and l_off % L == 0,
    )
