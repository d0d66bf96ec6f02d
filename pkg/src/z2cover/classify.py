"""Exhaustive classification of covers with flat pluricanonical structure.

The search space splits by the lcm ``L`` of the base weights:

* ``L >= 2``: proven inequalities confine ``(k, L, W)`` to finitely many
  cells; within a cell every eigensheaf degree is pinned to ``(k+1+t)L``
  for small excesses ``t``, and each excess assignment either inverts to
  integral branch data or dies.
* ``L == 1`` (straight projective space): the degree ``D`` is pinned per
  ``(m, k)`` by divisibility, candidate degree profiles are partitions of
  ``D``, profiles route to excess distributions filtered by exact moment
  identities, and distributions are realized (or refuted) by spectral
  reconstruction.  Above rank 4 reconstruction is replaced by lifting the
  complete rank ``s-1`` lists, which is exhaustive because every candidate
  support is smaller than the group.

Solutions are reported up to the GL_s(F_2) relabeling of the group, with a
status separating the reference catalog rows from supplementary and
classical items.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import lcm
from typing import Iterator, Sequence

from .cover import BranchData
from .gf2 import orbit_reps, parity_vector
from .walsh import NonIntegralError
from .wps import Weights, monomial_count, well_formed

__all__ = [
    "PluricanonicalReport",
    "AdmissibleSolution",
    "DistributionCounts",
    "ProjectiveCase",
    "is_pluricanonical",
    "max_admissible_m",
    "bound_prune",
    "forbidden_flat",
    "m_profiles",
    "l_distribution_candidates",
    "reconstruct_branch",
    "support_bound",
    "projective_cases",
    "enumerate_flat",
    "enumerate_L1",
    "RankOneFamily",
    "enumerate_s1",
    "bounds_report",
]

MAIN = "main"
SUPPLEMENTARY = "supplementary"
CLASSICAL = "classical"


@dataclass(frozen=True)
class PluricanonicalReport:
    m: int
    D: int
    M: Fraction
    k: int | None
    l: tuple[int, ...]
    p_m: int | None
    flat: bool
    admissible: bool
    reasons: tuple[str, ...]


@dataclass(frozen=True)
class AdmissibleSolution:
    weights: Weights
    s: int
    m: int
    k: int
    d: tuple[int, ...]
    l: tuple[int, ...]
    D: int
    p_m: int
    flat: bool
    status: str = MAIN
    note: str = ""

    def sort_key(self):
        return (self.m, self.k, self.weights.a, self.D, self.d)


@dataclass(frozen=True)
class DistributionCounts:
    """Multiset of eigensheaf degrees: ``counts[i] = (value, multiplicity)``."""

    s: int
    D: int
    base: int
    counts: tuple[tuple[int, int], ...]


def _half_sums(d: Sequence[int]) -> tuple[int, ...] | None:
    """Eigensheaf degrees of ``d`` or None when a half-sum is odd."""
    n = len(d)
    out = [0] * n
    for chi in range(1, n):
        acc = 0
        for g in range(1, n):
            if (chi & g).bit_count() & 1:
                acc += d[g]
        if acc & 1:
            return None
        out[chi] = acc // 2
    return tuple(out)


def is_pluricanonical(weights: Weights, branch: BranchData, m: int) -> PluricanonicalReport:
    """Decide whether the m-th pluricanonical system is a flat multiple.

    ``M = (m/2) D - m W`` must be a positive multiple of ``L``, and the
    twisted sections in every nontrivial character must vanish: no monomial
    may exist in degree ``M - l(chi)``.  The count of invariant sections
    ``p_m`` and the flatness of the eigensheaf degrees are reported either
    way.
    """
    if m < 1:
        raise ValueError(f"multiple m must be positive, got {m}")
    l = _half_sums(branch.d)
    if l is None:
        raise NonIntegralError(f"eigensheaf degrees of {branch.d} are not integral")
    D = branch.total
    L = weights.L
    reasons: list[str] = []
    M = Fraction(m, 2) * D - m * weights.W
    if M <= 0:
        reasons.append(f"multiple degree {M} is not positive")
    if M.denominator != 1:
        reasons.append(f"multiple degree {M} is not an integer")
    k = None
    p_m = None
    if not reasons:
        M_int = int(M)
        if M_int % L:
            reasons.append(f"multiple degree {M_int} is not a multiple of lcm {L}")
        else:
            k = M_int // L
        p_m = monomial_count(weights, M_int)
        for chi in range(1, len(l)):
            if monomial_count(weights, M_int - l[chi]) != 0:
                reasons.append(
                    f"sections survive in character {chi}: degree {M_int - l[chi]} is effective"
                )
                break
    flat = all(v % L == 0 for v in l)
    return PluricanonicalReport(
        m=m,
        D=D,
        M=M,
        k=k,
        l=l,
        p_m=p_m,
        flat=flat,
        admissible=not reasons,
        reasons=tuple(reasons),
    )


def max_admissible_m(weights: Weights, branch: BranchData) -> int | None:
    """Largest admissible multiple for fixed branch data, or None."""
    D = branch.total
    excess = Fraction(D, 2) - weights.W
    if excess <= 0:
        return None
    l = _half_sums(branch.d)
    if l is None:
        return None
    # beyond the largest degree plus a Frobenius allowance every
    # twisted degree is effective, so the loop below terminates
    top = max(l) + 4 * max(weights) ** 2
    best = None
    m = 1
    while m * excess <= top:
        if is_pluricanonical(weights, branch, m).admissible:
            best = m
        m += 1
    return best


def _beta(s: int) -> Fraction:
    return 2 - Fraction(1, 1 << (s - 1))


def bound_prune(s: int, m: int, L: int, W: int, k: int) -> bool:
    """True when ``(s, m, L, W, k)`` survives the proven weight-sum window.

    The window is ``(k+1) beta(s) - k/m <= W/L`` together with
    ``W <= 2L + 2``; cells that fail cannot carry admissible branch data.
    """
    if min(s, m, L, W, k) < 1:
        raise ValueError("all arguments must be positive")
    lower = (k + 1) * _beta(s) - Fraction(k, m)
    return Fraction(W, L) >= lower and W <= 2 * L + 2


def forbidden_flat(s: int, m: int) -> bool:
    """Proven exclusion region for flat covers over bases with L >= 2."""
    if s < 1 or m < 1:
        raise ValueError("rank and multiple must be positive")
    return (
        (s >= 2 and m >= 4)
        or (s >= 3 and m >= 3)
        or (s >= 4 and m >= 2)
        or s >= 6
    )


def _partitions(total: int, max_part: int, max_parts: int) -> Iterator[tuple[int, ...]]:
    """Partitions of ``total`` into at most ``max_parts`` parts <= max_part."""
    if total == 0:
        yield ()
        return
    if max_parts == 0 or max_part == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in _partitions(total - first, first, max_parts - 1):
            yield (first,) + rest


def m_profiles(s: int, D: int, min_l: int) -> list[tuple[int, ...]]:
    """Candidate branch-degree multisets for a rank-s cover of total D.

    The support must span (so at least ``s`` parts) and fit in the group;
    any ``s-1`` degrees sit inside one affine hyperplane of mass at most
    ``D - 2 min_l``, which bounds the sum of the ``s-1`` largest parts.
    """
    cap = D - 2 * min_l
    if cap < 1:
        return []
    out = []
    for p in _partitions(D, cap, (1 << s) - 1):
        if len(p) < s:
            continue
        if sum(p[: s - 1]) > cap:
            continue
        out.append(p)
    return out


def l_distribution_candidates(
    s: int, D: int, min_l: int, sum_sq: int
) -> list[DistributionCounts]:
    """Eigensheaf-degree multisets consistent with the exact moment identities.

    A degree profile with square sum ``sum_sq`` forces the quadratic moment
    ``sum (D - 4l)^2 = 2^s sum_sq - D^2`` over all characters, and the cubic
    moment ``(D^3 + sum (D - 4l)^3) / 2^s`` must be a nonnegative integer
    because it counts weighted zero-sum triples.
    """
    if s < 2:
        raise ValueError("need rank >= 2")
    n_chars = (1 << s) - 1
    total_l = (1 << (s - 2)) * D if s >= 2 else 0
    excess_total = total_l - n_chars * min_l
    if excess_total < 0:
        return []
    cap = D // 2 - min_l
    quad_target = (1 << s) * sum_sq - D * D
    out = []
    for part in _partitions(excess_total, cap, n_chars) if cap >= 0 else []:
        counts: dict[int, int] = {}
        for t in part:
            counts[min_l + t] = counts.get(min_l + t, 0) + 1
        counts[min_l] = counts.get(min_l, 0) + n_chars - len(part)
        quad = sum(n * (D - 4 * lv) ** 2 for lv, n in counts.items())
        if quad != quad_target:
            continue
        cubic_num = D**3 + sum(n * (D - 4 * lv) ** 3 for lv, n in counts.items())
        if cubic_num < 0 or cubic_num % (1 << s):
            continue
        out.append(
            DistributionCounts(
                s=s, D=D, base=min_l, counts=tuple(sorted(counts.items()))
            )
        )
    return out


def support_bound(C: int, p: int) -> int:
    """Placement bound ``C - p + 1`` for ``p`` independent constraints on C slots."""
    if p > C:
        raise ValueError("more constraints than slots")
    return C - p + 1


def _parity_masks(s: int) -> list[int]:
    """For each character, the set ``{x : chi.x = 1}`` packed 4 bits per x."""
    n = 1 << s
    masks = [0] * n
    for chi in range(1, n):
        acc = 0
        for x in range(1, n):
            if (chi & x).bit_count() & 1:
                acc |= 1 << (4 * x)
        masks[chi] = acc
    return masks


_PARITY_MASKS: dict[int, list[int]] = {}


def _reconstruct_distribution(
    s: int, D: int, base: int, excess: Sequence[tuple[int, int]]
) -> Iterator[tuple[int, ...]]:
    """All branch functions whose degree multiset matches the distribution.

    ``excess`` lists ``(value, multiplicity)`` pairs of l-values above the
    base.  Inversion uses ``d(x) = (base - E + 2 T(x)) / 2^(s-2)`` where T
    accumulates the excesses over characters pairing to 1 with x; the T
    accumulator is packed 4 bits per group element into one integer, so a
    placement is validated with a handful of big-int adds.
    """
    n = 1 << s
    div = 1 << (s - 2)
    e_total = sum((v - base) * c for v, c in excess)
    const = base - e_total
    # 4-bit fields: each T(x) is at most e_total, which must fit
    if e_total >= 16:
        yield from _reconstruct_slow(s, D, base, excess)
        return
    if s >= 3 and const % 2:
        return  # every numerator would be odd
    if s not in _PARITY_MASKS:
        _PARITY_MASKS[s] = _parity_masks(s)
    masks = _PARITY_MASKS[s]
    values = sorted({v for v, _ in excess}, reverse=True)
    mult = dict(excess)

    def place(vi: int, avail: tuple[int, ...], acc: int) -> Iterator[int]:
        if vi == len(values):
            yield acc
            return
        v = values[vi]
        e = v - base
        for combo in combinations(avail, mult[v]):
            add = 0
            for chi in combo:
                add += masks[chi]
            taken = set(combo)
            rest = tuple(c for c in avail if c not in taken)
            yield from place(vi + 1, rest, acc + e * add)

    chars = tuple(range(1, n))
    for t_packed in place(0, chars, 0):
        d = [0] * n
        ok = True
        for x in range(1, n):
            num = const + 2 * ((t_packed >> (4 * x)) & 0xF)
            if num < 0 or num % div:
                ok = False
                break
            d[x] = num // div
        if ok:
            assert sum(d) == D
            yield tuple(d)


def _reconstruct_slow(
    s: int, D: int, base: int, excess: Sequence[tuple[int, int]]
) -> Iterator[tuple[int, ...]]:
    # fallback without bit packing, for distributions with large excess mass
    n = 1 << s
    div = 1 << (s - 2)
    e_total = sum((v - base) * c for v, c in excess)
    const = base - e_total
    values = sorted({v for v, _ in excess}, reverse=True)
    mult = dict(excess)

    def place(vi: int, avail: tuple[int, ...], assigned: dict[int, int]) -> Iterator[dict[int, int]]:
        if vi == len(values):
            yield assigned
            return
        v = values[vi]
        for combo in combinations(avail, mult[v]):
            taken = set(combo)
            yield from place(
                vi + 1,
                tuple(c for c in avail if c not in taken),
                {**assigned, **{chi: v - base for chi in combo}},
            )

    for assigned in place(0, tuple(range(1, n)), {}):
        d = [0] * n
        ok = True
        for x in range(1, n):
            t = 0
            for chi, e in assigned.items():
                if (chi & x).bit_count() & 1:
                    t += e
            num = const + 2 * t
            if num < 0 or num % div:
                ok = False
                break
            d[x] = num // div
        if ok:
            assert sum(d) == D
            yield tuple(d)


def reconstruct_branch(s: int, D: int, dist: DistributionCounts) -> list[tuple[int, ...]]:
    """Branch functions realizing an eigensheaf-degree multiset, up to GL_s."""
    excess = tuple((v, c) for v, c in dist.counts if v != dist.base)
    placed = sum(c for _, c in excess)
    base_count = dict(dist.counts).get(dist.base, 0)
    if base_count + placed != (1 << s) - 1:
        raise ValueError("distribution does not cover every character")
    survivors = set(_reconstruct_distribution(s, D, dist.base, excess))
    if not survivors:
        return []
    return sorted(orbit_reps(survivors, s))


# ---------------------------------------------------------------------------
# flat bases (L >= 2)


def _divisor_quadruples(L: int, W: int) -> list[Weights]:
    divs = [d for d in range(1, L + 1) if L % d == 0]
    out = []
    for quad in combinations_with_replacement(divs, 4):
        if sum(quad) != W or lcm(*quad) != L:
            continue
        if not well_formed(quad):
            continue
        out.append(Weights(quad))
    return out


def _unit_fraction_quadruples(target: Fraction) -> Iterator[tuple[int, ...]]:
    """Nondecreasing quadruples with sum of reciprocals equal to target."""

    def rec(prefix: tuple[int, ...], remaining: Fraction) -> Iterator[tuple[int, ...]]:
        slots = 4 - len(prefix)
        if slots == 0:
            if remaining == 0:
                yield prefix
            return
        if remaining <= 0:
            return
        lo = max(prefix[-1] if prefix else 1, math.ceil(Fraction(1) / remaining))
        hi = math.floor(slots / remaining)
        for b in range(lo, hi + 1):
            yield from rec(prefix + (b,), remaining - Fraction(1, b))

    yield from rec((), target)


def _weights_from_reciprocals(quad: tuple[int, ...]) -> Weights | None:
    """Weights ``L/b_i`` when they are lcm-exact and well formed."""
    L = lcm(*quad)
    a = tuple(L // b for b in quad)
    if lcm(*a) != L or not well_formed(a):
        return None
    return Weights(a)


def _degenerate_flat_weights() -> list[Weights]:
    """Bases with W = 2L: the one window where L is not bounded by the cell."""
    out = []
    for quad in _unit_fraction_quadruples(Fraction(2)):
        w = _weights_from_reciprocals(quad)
        if w is not None and w.L >= 2:
            out.append(w)
    return out


def _flat_cells(s: int, m: int) -> list[tuple[int, int, int, Weights]]:
    """All ``(k, L, W, weights)`` cells surviving the proven windows."""
    cells: list[tuple[int, int, int, Weights]] = []
    beta = _beta(s)
    k = 1
    while True:
        lower = (k + 1) * beta - Fraction(k, m)
        if lower > 3:  # W/L <= 2 + 2/L <= 3 for L >= 2
            break
        bracket = k * ((1 << s) - 1 - Fraction(1 << (s - 1), m)) - 1
        if bracket <= 0:
            # only (s, m, k) = (2, 1, 1); W = 2L is closed by reciprocal sums
            assert (s, m, k) == (2, 1, 1), "unbounded cell outside the known window"
            for w in _degenerate_flat_weights():
                cells.append((k, w.L, 2 * w.L, w))
            for c in (1, 2):  # W = 2L + c leaves excess 2c, and L must divide it
                for L in range(2, 2 * c + 1):
                    if (2 * c) % L:
                        continue
                    W = 2 * L + c
                    for w in _divisor_quadruples(L, W):
                        cells.append((k, L, W, w))
            k += 1
            continue
        L_max = math.floor(Fraction(1 << s) / bracket)
        for L in range(2, L_max + 1):
            if (2 * k * L) % m:
                continue
            w_lo = math.ceil(L * lower)
            for W in range(w_lo, 2 * L + 3):
                for w in _divisor_quadruples(L, W):
                    cells.append((k, L, W, w))
        k += 1
    return cells


def _finish_solution(
    weights: Weights, s: int, m: int, rep: tuple[int, ...]
) -> AdmissibleSolution:
    branch = BranchData(s, rep)
    report = is_pluricanonical(weights, branch, m)
    assert report.admissible and report.k is not None and report.p_m is not None
    sol = AdmissibleSolution(
        weights=weights,
        s=s,
        m=m,
        k=report.k,
        d=rep,
        l=report.l,
        D=report.D,
        p_m=report.p_m,
        flat=report.flat,
    )
    top = max_admissible_m(weights, branch)
    if top is not None and top != m:
        sol = replace(
            sol,
            status=SUPPLEMENTARY,
            note=f"also admissible with m = {top}; listed there",
        )
    return sol


_FLAT_CACHE: dict[tuple[int, int], list[AdmissibleSolution]] = {}


def enumerate_flat(s: int, m: int) -> list[AdmissibleSolution]:
    """Complete list of admissible covers over bases with ``L >= 2``.

    Exhaustive for ``2 <= s <= 6``: the cell windows are finite and every
    eigensheaf-degree assignment inside a cell is tested by exact inversion.
    """
    if not 2 <= s <= 6:
        raise ValueError("flat enumeration is exhaustive only for ranks 2..6")
    if m < 1:
        raise ValueError("multiple must be positive")
    key = (s, m)
    if key in _FLAT_CACHE:
        return _FLAT_CACHE[key]
    n_chars = (1 << s) - 1
    sols: list[AdmissibleSolution] = []
    for k, L, W, weights in _flat_cells(s, m):
        if (2 * k * L) % m:
            continue
        D = 2 * W + 2 * k * L // m
        base = (k + 1) * L
        total_l = (1 << (s - 2)) * D
        excess_total = total_l - n_chars * base
        if excess_total < 0 or excess_total % L:
            continue
        u = excess_total // L
        cap = (D // 2 - base) // L
        survivors: set[tuple[int, ...]] = set()
        for part in _partitions(u, cap, n_chars) if cap >= 0 or u == 0 else []:
            counts: dict[int, int] = {}
            for t in part:
                counts[base + t * L] = counts.get(base + t * L, 0) + 1
            excess = tuple(sorted(counts.items()))
            survivors.update(_reconstruct_distribution(s, D, base, excess))
        if not survivors:
            continue
        for rep in sorted(orbit_reps(survivors, s)):
            sols.append(_finish_solution(weights, s, m, rep))
    sols.sort(key=AdmissibleSolution.sort_key)
    _FLAT_CACHE[key] = sols
    return sols


# ---------------------------------------------------------------------------
# projective base (L == 1)


@dataclass(frozen=True)
class ProjectiveCase:
    m: int
    k: int
    D: int
    s_min: int
    s_max: int | None  # inclusive; None = unbounded


def projective_cases(m: int) -> list[ProjectiveCase]:
    """Admissible ``(k, D)`` windows over the straight projective space.

    Derived from the proven degree inequalities: for ``m = 1`` a rank-s
    cover needs ``(k-2) 2^s <= 2k+2``, for ``m = 2`` it needs
    ``(3k-4) 2^s <= 4k+4``, and ``m >= 3`` admits only ``(m, k) = (4, 2)``
    at rank 2.  ``D = 8 + 2k/m`` must be an integer.
    """
    if m < 1:
        raise ValueError("multiple must be positive")
    cases: list[ProjectiveCase] = []
    if m in (1, 2):
        for k in range(1, 64):
            if (2 * k) % m:
                continue
            D = 8 + 2 * k // m
            num = (2 * m - 1) * k - 2 * m  # num * 2^s <= 2m(k+1)
            if num <= 0:
                cases.append(ProjectiveCase(m=m, k=k, D=D, s_min=2, s_max=None))
                continue
            bound = Fraction(2 * m * (k + 1), num)
            if bound < 4:
                break
            floor_bound = bound.numerator // bound.denominator
            s_max = floor_bound.bit_length() - 1  # largest s with 2^s <= bound
            if s_max >= 2:
                cases.append(ProjectiveCase(m=m, k=k, D=D, s_min=2, s_max=s_max))
    elif m == 4:
        cases.append(ProjectiveCase(m=4, k=2, D=9, s_min=2, s_max=2))
    return cases


def _case_active(case: ProjectiveCase, s: int) -> bool:
    return case.s_min <= s and (case.s_max is None or s <= case.s_max)


def _lift_candidates(parent: tuple[int, ...], s: int) -> Iterator[tuple[int, ...]]:
    """Rank-s branch functions projecting to ``parent`` along the top axis."""
    half = len(parent)
    support = [g for g in range(1, half) if parent[g]]
    top = half

    def rec(idx: int, d: list[int]) -> Iterator[tuple[int, ...]]:
        if idx == len(support):
            yield tuple(d)
            return
        g = support[idx]
        for up in range(parent[g] + 1):
            d[g] = parent[g] - up
            d[g | top] = up
            yield from rec(idx + 1, d)
        d[g] = d[g | top] = 0

    yield from rec(0, [0] * (2 * half))


_P3 = Weights((1, 1, 1, 1))

_L1_CACHE: dict[tuple[int, int], list[AdmissibleSolution]] = {}


def _projective_surviving_reps(s: int, m: int, case: ProjectiveCase) -> list[tuple[int, ...]]:
    min_l = case.k + 1
    if s <= 4:
        sum_sqs = sorted({sum(v * v for v in p) for p in m_profiles(s, case.D, min_l)})
        reps: set[tuple[int, ...]] = set()
        seen: set[tuple[tuple[int, int], ...]] = set()
        for sq in sum_sqs:
            for dist in l_distribution_candidates(s, case.D, min_l, sq):
                if dist.counts in seen:
                    continue
                seen.add(dist.counts)
                reps.update(reconstruct_branch(s, case.D, dist))
        return sorted(reps)
    # recursive lifting: every rank-s support misses a direction because
    # D < 2^s - 1, so projections to rank s-1 are again solutions there
    assert case.D < (1 << s) - 1
    parents = [
        sol.d
        for sol in enumerate_L1(s - 1, m)
        if sol.m == m and sol.k == case.k and sol.D == case.D
    ]
    survivors: set[tuple[int, ...]] = set()
    for parent in parents:
        for cand in _lift_candidates(parent, s):
            if parity_vector(cand):
                continue
            branch = BranchData(s, cand)
            report = is_pluricanonical(_P3, branch, m)
            if report.admissible:
                survivors.add(cand)
    if not survivors:
        return []
    return sorted(orbit_reps(survivors, s))


def enumerate_L1(s: int, m: int) -> list[AdmissibleSolution]:
    """Complete list of admissible covers of the straight projective space."""
    if s < 2:
        raise ValueError("rank-1 towers are families; use enumerate_s1")
    if m < 1:
        raise ValueError("multiple must be positive")
    key = (s, m)
    if key in _L1_CACHE:
        return _L1_CACHE[key]
    sols: list[AdmissibleSolution] = []
    for case in projective_cases(m):
        if not _case_active(case, s):
            continue
        for rep in _projective_surviving_reps(s, m, case):
            sol = _finish_solution(_P3, s, m, rep)
            sol = _apply_projective_status(sol, case)
            sols.append(sol)
    sols.sort(key=AdmissibleSolution.sort_key)
    _L1_CACHE[key] = sols
    return sols


def _apply_projective_status(sol: AdmissibleSolution, case: ProjectiveCase) -> AdmissibleSolution:
    if sol.status == SUPPLEMENTARY:  # non-maximal m wins over case labels
        return sol
    if case.m == 1 and case.k == 1:
        return replace(
            sol,
            status=CLASSICAL,
            note="classical family of low-degree canonical covers",
        )
    if (case.m, case.k) in ((1, 2), (2, 1)) and sol.s <= 3:
        return replace(
            sol,
            status=SUPPLEMENTARY,
            note="not among the catalogued families at this rank",
        )
    if sol.s == 4 and case.m == 2 and max(sol.d) == 1:
        return replace(
            sol,
            status=SUPPLEMENTARY,
            note="branch divisor splits into distinct planes; listed separately",
        )
    return sol


# ---------------------------------------------------------------------------
# rank 1: unbounded families


@dataclass(frozen=True)
class RankOneFamily:
    """One-parameter tower of double covers: ``d = 2 L t`` on one component.

    ``t`` runs over integers with ``t_min <= t`` and, when the window is
    bounded, ``t < t_sup``.
    """

    weights: Weights
    m: int
    t_min: int
    t_sup: int | None
    status: str = MAIN
    note: str = ""

    @property
    def degree_coefficient(self) -> int:
        return 2 * self.weights.L

    def k_of(self, t: int) -> int:
        L, W = self.weights.L, self.weights.W
        M = self.m * (L * t - W)
        assert M > 0 and M % L == 0
        return M // L

    def instantiate(self, t: int) -> AdmissibleSolution:
        if t < self.t_min or (self.t_sup is not None and t >= self.t_sup):
            raise ValueError(f"parameter {t} outside the family window")
        L = self.weights.L
        branch = BranchData(1, (0, 2 * L * t))
        report = is_pluricanonical(self.weights, branch, self.m)
        assert report.admissible and report.k is not None and report.p_m is not None
        return AdmissibleSolution(
            weights=self.weights,
            s=1,
            m=self.m,
            k=report.k,
            d=branch.d,
            l=report.l,
            D=report.D,
            p_m=report.p_m,
            flat=report.flat,
            status=self.status,
            note=self.note,
        )


def enumerate_s1(m: int, t_max: int | None = None) -> list[RankOneFamily]:
    """All rank-1 towers for the given multiple.

    For ``m = 1`` the base must satisfy ``L | W``; the families are the
    reciprocal-sum quadruples with ``W/L`` in 1..4 and the window is
    unbounded above.  For ``m >= 2`` the constraints are ``L | mW`` and
    ``m-1 | 2W`` with the finite window ``W/L < t < (1 + 1/(m-1)) W/L``.
    ``t_max``, when given, truncates the reported unbounded windows.
    """
    if m < 1:
        raise ValueError("multiple must be positive")
    families: list[RankOneFamily] = []
    targets = (
        [Fraction(c) for c in range(1, 5)]
        if m == 1
        else [Fraction(c, m) for c in range(1, 4 * m + 1)]
    )
    for target in targets:
        for quad in _unit_fraction_quadruples(target):
            w = _weights_from_reciprocals(quad)
            if w is None:
                continue
            L, W = w.L, w.W
            if m == 1:
                assert W % L == 0
                t_min = W // L + 1
                t_sup = None
                status, note = MAIN, ""
                if w.a == (2, 3, 3, 4):
                    status = SUPPLEMENTARY
                    note = "valid tower missing from the reference catalog"
            else:
                if (2 * W) % (m - 1):
                    continue
                ratio = Fraction(W, L)
                t_min = math.floor(ratio) + 1
                upper = (1 + Fraction(1, m - 1)) * ratio
                t_sup = math.ceil(upper) if upper != math.ceil(upper) else int(upper)
                if t_min >= t_sup:
                    continue
                status, note = MAIN, ""
            if t_max is not None:
                if t_min > t_max:
                    continue
                if t_sup is None or t_sup > t_max + 1:
                    t_sup = t_max + 1
                    if t_sup <= t_min:
                        continue
            families.append(
                RankOneFamily(
                    weights=w, m=m, t_min=t_min, t_sup=t_sup, status=status, note=note
                )
            )
    families.sort(key=lambda f: (-Fraction(f.weights.W, f.weights.L), f.weights.a))
    return families


# ---------------------------------------------------------------------------
# reporting


def bounds_report(s: int, m: int) -> str:
    """Human-readable certificate of the windows behind an enumeration."""
    lines = [f"rank s={s}, multiple m={m}"]
    beta = _beta(s)
    lines.append(f"flat bases: weight window (k+1)*{beta} - k/{m} <= W/L <= 2 + 2/L")
    cells = _flat_cells(s, m) if 2 <= s <= 6 else []
    if cells:
        for k, L, W, w in cells:
            lines.append(f"  cell k={k} L={L} W={W} weights={w}")
    else:
        lines.append("  no surviving (k, L, W) cells")
    lines.append(f"flat exclusion region hit: {forbidden_flat(s, m)}")
    cases = [c for c in projective_cases(m) if _case_active(c, s)]
    if cases:
        lines.append("projective base: degree pinned per (m, k) by the rank inequality")
        for c in cases:
            top = "unbounded" if c.s_max is None else f"s<={c.s_max}"
            lines.append(f"  case m={c.m} k={c.k} D={c.D} ({top})")
    else:
        lines.append("projective base: no (m, k) case admits this rank")
    return "\n".join(lines)
