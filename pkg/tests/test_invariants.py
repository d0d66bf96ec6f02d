"""Cover invariants and the exact Chern-ratio geography."""

import random
from fractions import Fraction

import pytest

from z2cover.cover import BranchData, CoverSpec
from z2cover.invariants import (
    SCI_MAX,
    SCI_MIN,
    Y_MIN,
    GeographyPoint,
    RatioVector,
    barycenter_ratio,
    geography_point,
    holomorphic_euler,
    hunt_scan,
    invariant_report,
    topological_euler,
    vertex_ratio,
    volume,
)
from z2cover.wps import Weights


def cover(weights, d):
    s = (len(d)).bit_length() - 1
    return CoverSpec(Weights(weights), BranchData(s, tuple(d)))


# Double covers of P^3 branched in a single surface of degree 2t:
# classical textbook values pin the three closed formulas at once.
def test_double_cover_of_p3_low_degree():
    spec = cover((1, 1, 1, 1), (0, 2))
    assert volume(spec) == -54
    assert holomorphic_euler(spec) == 1
    e, exact = topological_euler(spec)
    assert exact and e == 4


def test_double_cover_of_p3_general_type():
    spec = cover((1, 1, 1, 1), (0, 10))
    assert volume(spec) == 2
    assert holomorphic_euler(spec) == -3
    e, exact = topological_euler(spec)
    assert exact and e == -652


def test_bidouble_cover_triple_planes():
    spec = cover((1, 1, 1, 1), (0, 3, 3, 3))
    assert volume(spec) == Fraction(1, 2)
    assert holomorphic_euler(spec) == 1
    e, exact = topological_euler(spec)
    assert exact and e == -92


def test_euler_not_certified_off_p3():
    _, exact = topological_euler(cover((1, 1, 2, 2), (0, 4, 4, 8)))
    assert not exact


def test_invariant_report_fields():
    rep = invariant_report(cover((1, 1, 1, 1), (0, 3, 3, 3)))
    assert (rep.k3, rep.chi, rep.euler) == (Fraction(1, 2), 1, -92)
    assert rep.euler_exact and rep.flat
    assert rep.hurwitz == Fraction(1, 2)
    assert rep.half_points == 27
    assert rep.x == Fraction(-92, 24)
    assert rep.y == Fraction(-1, 48)
    assert rep.sci == rep.y * (3 * rep.x + 1) - 4


def test_invariant_report_chi_zero_leaves_geography_empty():
    # degree-8 double solid: chi = 0, so the ratios are undefined
    spec = cover((1, 1, 1, 1), (0, 8))
    rep = invariant_report(spec)
    assert rep.chi == 0
    assert rep.x is None and rep.y is None and rep.sci is None


class TestRatioVector:
    def test_validates(self):
        with pytest.raises(ValueError):
            RatioVector(2, (Fraction(1), Fraction(0), Fraction(0), Fraction(0)))
        with pytest.raises(ValueError):
            RatioVector(2, (Fraction(0), Fraction(1, 2), Fraction(0), Fraction(0)))
        with pytest.raises(ValueError):
            RatioVector(1, (Fraction(0), Fraction(1), Fraction(0), Fraction(0)))

    def test_vertex_and_barycenter(self):
        v = vertex_ratio(3)
        assert v.r[1] == 1 and sum(v.r) == 1
        b = barycenter_ratio(2)
        assert b.r == (0, Fraction(1, 3), Fraction(1, 3), Fraction(1, 3))
        with pytest.raises(ValueError):
            vertex_ratio(2, 4)


def test_vertex_geography_is_rank_free():
    # a single-component branch divisor behaves like a double cover
    for s in (2, 3, 4, 5):
        p = geography_point(vertex_ratio(s))
        assert (p.x, p.y, p.sci) == (2, Fraction(1, 2), Fraction(-1, 2))
        assert p.sci == SCI_MIN


def test_barycenter_y_values():
    # y at the barycenter: 2 - 2^(2-s) + 2^(1-2s)
    expected = {
        2: Fraction(9, 8),
        3: Fraction(49, 32),
        4: Fraction(225, 128),
        5: Fraction(961, 512),
        6: Fraction(3969, 2048),
    }
    for s, want in expected.items():
        p = geography_point(barycenter_ratio(s))
        assert p.y == want
        assert p.y == 2 - Fraction(4, 1 << s) + Fraction(1, 1 << (2 * s - 1))


def test_geography_moment_identity_random():
    rng = random.Random(77)
    for s in (2, 3, 4):
        n = 1 << s
        for _ in range(25):
            masses = [rng.randrange(0, 5) for _ in range(n - 1)]
            if not any(masses):
                continue
            total = sum(masses)
            r = (Fraction(0),) + tuple(Fraction(m, total) for m in masses)
            p = geography_point(RatioVector(s, r))
            # the identity phi = 3b - T + 1 is asserted inside; check ranges
            assert SCI_MIN <= p.sci <= SCI_MAX
            assert p.y >= Y_MIN
            assert p.phi > 0


def test_geography_limit_matches_large_covers():
    # blowing up the branch degree drives (x, y) to the ratio-vector point
    ratio = barycenter_ratio(2)
    target = geography_point(ratio)
    prev = None
    for t in (30, 60, 120):
        spec = cover((1, 1, 1, 1), (0, t, t, t))
        rep = invariant_report(spec)
        gap = abs(rep.y - target.y) + abs(rep.x - target.x)
        if prev is not None:
            assert gap < prev / 2  # better than linear convergence in 1/t
        prev = gap


def test_hunt_scan_window_values():
    # frozen scan of the four-point hunt family (rank 3)
    expect = {
        Fraction(1, 2): Fraction(-1, 36),
        Fraction(11, 20): Fraction(17, 5000),
        Fraction(3, 5): Fraction(136, 5625),
        Fraction(13, 20): Fraction(1063, 45000),
        Fraction(17, 25): Fraction(26726, 3515625),
    }
    for t, want in expect.items():
        f, point = hunt_scan(3, t)
        assert f == want
        assert point.zero_sum_triples == 0
        assert 4 * f == point.sci * point.phi**2


def test_hunt_scan_left_endpoint_is_negative():
    # F < 0 at t = 1/2: the positivity window opens strictly afterwards
    f, point = hunt_scan(3, Fraction(1, 2))
    assert f == Fraction(-1, 36)
    assert point.sci < 0


def test_hunt_scan_interior_positive():
    for t in (Fraction(11, 20), Fraction(3, 5), Fraction(13, 20), Fraction(17, 25)):
        f, point = hunt_scan(3, t)
        assert f > 0
        assert point.sci > 0


def test_hunt_scan_sci_formula():
    f, point = hunt_scan(3, Fraction(3, 5))
    assert point.sci == Fraction(17, 882)
    f1, p1 = hunt_scan(3, 1)
    assert f1 == -2 and p1.sci == Fraction(-1, 2)


def test_hunt_scan_domain():
    with pytest.raises(ValueError):
        hunt_scan(2, Fraction(1, 2))
    with pytest.raises(ValueError):
        hunt_scan(3, 0)
    with pytest.raises(ValueError):
        hunt_scan(3, Fraction(6, 5))


def test_hunt_scan_rank_dependence():
    # the same mass profile on larger groups stays zero-sum-free
    for s in (3, 4, 5):
        f, point = hunt_scan(s, Fraction(3, 5))
        assert point.zero_sum_triples == 0
        assert point.s == s
