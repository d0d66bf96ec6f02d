"""Deformation criteria, hyperplane configurations, and the example generators."""

import pytest

from z2cover.classify import is_pluricanonical
from z2cover.cover import BranchData, CoverSpec, eigensheaf_degrees, is_flat
from z2cover.moduli import (
    STABILITY_NOTE,
    deformation_criteria,
    gen_new_component,
    gen_unbounded,
    hyperplane_config_check,
)
from z2cover.wps import Weights, monomial_count


def p3_cover(d):
    s = (len(d)).bit_length() - 1
    return CoverSpec(Weights((1, 1, 1, 1)), BranchData(s, tuple(d)))


class TestDeformationCriteria:
    def test_passing_cover(self):
        rep = deformation_criteria(p3_cover((0,) + (2,) * 7))
        assert rep.ok
        assert rep.pairwise_ok and rep.total_degree_ok and rep.weights_coprime
        assert rep.failing_pairs == ()
        assert rep.genericity_assumed
        assert rep.messages == (STABILITY_NOTE,)

    def test_pair_criterion_failure(self):
        rep = deformation_criteria(p3_cover((0, 6, 6, 6)))
        assert not rep.ok
        assert not rep.pairwise_ok
        # one failing (g, chi) pair per character at rank 2
        assert rep.failing_pairs == ((2, 1), (1, 2), (3, 3))
        assert rep.total_degree_ok
        assert any("reaches the eigensheaf degree" in m for m in rep.messages)
        assert rep.messages[-1] == STABILITY_NOTE

    def test_rank2_pair_criterion_is_never_satisfiable(self):
        # summing 2 d_g < sum of the other two over the three pairs is absurd
        for d in [(0, 2, 4, 6), (0, 8, 8, 8), (0, 2, 2, 8)]:
            assert not deformation_criteria(p3_cover(d)).pairwise_ok

    def test_total_degree_and_coprimality_flags(self):
        small = deformation_criteria(p3_cover((0, 2, 2, 4)))
        assert not small.total_degree_ok  # D = 8 = 2W
        weighted = CoverSpec(Weights((1, 1, 2, 2)), BranchData(2, (0, 4, 8, 8)))
        wrep = deformation_criteria(weighted)
        assert not wrep.weights_coprime
        assert not wrep.ok


class TestHyperplaneConfig:
    def test_full_support_configuration(self):
        assert hyperplane_config_check(4, Weights((1, 1, 1, 1)))
        assert not hyperplane_config_check(3, Weights((1, 1, 2, 3)))

    def test_subspace_configuration(self):
        assert hyperplane_config_check(4, Weights((1, 1, 1, 2)), 2)

    def test_preconditions(self):
        with pytest.raises(ValueError):
            hyperplane_config_check(2, Weights((1, 1, 1, 1)))
        with pytest.raises(ValueError):
            hyperplane_config_check(3, Weights((1, 1, 1, 1)), 1)
        with pytest.raises(ValueError):
            hyperplane_config_check(3, Weights((1, 1, 1, 1)), 3)


class TestNewComponent:
    @pytest.mark.parametrize("M", [4, 6, 8, 20])
    def test_construction(self, M):
        spec = gen_new_component(M)
        assert spec.weights.a == (1, 1, 1, M)
        assert spec.branch.d[:2] == (0, 2)
        assert set(spec.branch.d[2:]) == {M}
        assert not is_flat(spec)
        assert deformation_criteria(spec).ok

    def test_eigensheaf_degrees_split(self):
        assert set(eigensheaf_degrees(gen_new_component(4).branch).l[1:]) == {15, 16}
        assert set(eigensheaf_degrees(gen_new_component(6).branch).l[1:]) == {22, 24}
        assert set(eigensheaf_degrees(gen_new_component(20).branch).l[1:]) == {71, 80}

    def test_rejects_bad_degree(self):
        with pytest.raises(ValueError):
            gen_new_component(5)
        with pytest.raises(ValueError):
            gen_new_component(2)


CANONICAL_EXPECTED = {
    # s: (L, height, l_on, l_off, flat)
    4: (2, 2, 8, 4, True),
    5: (2, 1, 8, 4, True),
    6: (10, 2, 32, 16, False),
    7: (10, 1, 32, 16, False),
    10: (170, 2, 512, 256, False),
    24: (2796202, 2, 8388608, 4194304, False),
}

BICANONICAL_EXPECTED = {
    3: (4, 6, 12, 6, False),
    4: (4, 3, 12, 6, False),
    5: (12, 4, 32, 16, False),
    24: (5033164, 3, 12582912, 6291456, False),
}


class TestUnbounded:
    @pytest.mark.parametrize("s", sorted(CANONICAL_EXPECTED))
    def test_canonical_family(self, s):
        fam = gen_unbounded(s, "canonical")
        L, height, l_on, l_off, flat = CANONICAL_EXPECTED[s]
        assert fam.weights.a == (1, 1, L, L)
        assert (fam.height, fam.l_on, fam.l_off, fam.flat) == (height, l_on, l_off, flat)
        assert fam.M == L and fam.m == 1
        assert fam.total == height << (s - 1)
        assert fam.p_m == L + 3

    @pytest.mark.parametrize("s", sorted(BICANONICAL_EXPECTED))
    def test_bicanonical_family(self, s):
        fam = gen_unbounded(s, "bicanonical")
        L, height, l_on, l_off, flat = BICANONICAL_EXPECTED[s]
        assert fam.weights.a == (1, 1, L, L)
        assert (fam.height, fam.l_on, fam.l_off, fam.flat) == (height, l_on, l_off, flat)
        assert fam.M == L and fam.m == 2
        assert fam.p_m == L + 3

    def test_canonical_degree_identity(self):
        # D = 2W + 2L with W = 2L + 2, so the total degree is 6L + 4
        for s in range(4, 25):
            fam = gen_unbounded(s, "canonical")
            assert 6 * fam.L == fam.total - 4
            assert fam.flat == (s in (4, 5))

    def test_bicanonical_degree_identity(self):
        for s in range(3, 25):
            fam = gen_unbounded(s, "bicanonical")
            assert 5 * fam.L == fam.total - 4
            assert not fam.flat
            assert 1 <= fam.height <= 9

    def test_closed_form_eigensheaf_degrees(self):
        fam = gen_unbounded(6, "canonical")
        n = 1 << 6
        on = sum(1 for chi in range(1, n) if fam.eigensheaf_degree(chi) == fam.l_on)
        off = sum(1 for chi in range(1, n) if fam.eigensheaf_degree(chi) == fam.l_off)
        assert (on, off) == (1, n - 2)
        assert fam.eigensheaf_degree(0) == 0

    @pytest.mark.parametrize("s,kind", [(4, "canonical"), (5, "canonical"),
                                        (6, "canonical"), (3, "bicanonical"),
                                        (5, "bicanonical"), (8, "bicanonical")])
    def test_materialized_cover_matches_closed_form(self, s, kind):
        fam = gen_unbounded(s, kind)
        spec = fam.cover_spec()
        degs = eigensheaf_degrees(spec.branch)
        assert set(degs.l[1:]) <= {fam.l_on, fam.l_off}
        assert degs.l[1] == fam.l_on  # the defining character carries the on-degree
        assert spec.branch.total == fam.total
        rep = is_pluricanonical(fam.weights, spec.branch, fam.m)
        assert rep.admissible
        assert rep.k == 1 and rep.M == fam.M
        assert rep.p_m == fam.p_m
        assert rep.flat == fam.flat

    def test_admissibility_closed_form_large(self):
        # no materialization: vanishing needs l > M for both degree values
        for s in range(4, 25):
            for kind in ("canonical", "bicanonical") if s > 3 else ("bicanonical",):
                fam = gen_unbounded(s, kind)
                assert fam.l_off > fam.M
                assert monomial_count(fam.weights, fam.M - fam.l_off) == 0
                assert fam.M % fam.weights.L == 0 and fam.M > 0

    def test_kind_and_rank_validation(self):
        with pytest.raises(ValueError):
            gen_unbounded(3, "canonical")
        with pytest.raises(ValueError):
            gen_unbounded(2, "bicanonical")
        with pytest.raises(ValueError):
            gen_unbounded(5, "pluri")
