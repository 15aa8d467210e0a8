"""Tests for Brill-Noether numbers and section bookkeeping."""

import random

import pytest

from prymcalc.algebra.brill_noether import (
    GENERIC_TWIST_H0,
    THETA_TWIST_H0,
    TWO_POINT_SECTIONS,
    BNParams,
    bijectivity_bookkeeping,
    delta0pp_jump,
    excluded_loci_codimension,
    irreducibility_criterion,
    mult_map_dimension_balance,
    petri_chain,
    rho,
    riemann_roch_h0,
    serre_dual,
    series_count,
)
from prymcalc.errors import ComputationError

GENUS_15 = BNParams(15, 4, 16)


class TestBNParams:
    """Tests for BNParams validation."""

    def test_k(self):
        assert GENUS_15.k == 4

    @pytest.mark.parametrize("g,r,d", [(1, 0, 0), (15, -1, 16), (15, 4, -1)])
    def test_rejects_out_of_range(self, g, r, d):
        with pytest.raises(ComputationError) as exc:
            BNParams(g, r, d)
        assert exc.value.code == "E100"


class TestRho:
    """Tests for rho."""

    def test_genus_15_is_zero(self):
        assert rho(GENUS_15) == 0

    def test_more_sections(self):
        assert rho(BNParams(15, 5, 16)) == -9

    def test_lower_degree(self):
        assert rho(BNParams(15, 4, 15)) == -5


class TestSeriesCount:
    """Tests for series_count."""

    def test_genus_15(self):
        assert series_count(GENUS_15) == 6006

    def test_hyperelliptic_genus_2(self):
        assert series_count(BNParams(2, 1, 2)) == 1

    def test_trigonal_pencils_genus_4(self):
        """A general genus 4 curve has two g^1_3."""
        assert series_count(BNParams(4, 1, 3)) == 2

    def test_plane_sextics_genus_6(self):
        """A general genus 6 curve has five g^2_6."""
        assert series_count(BNParams(6, 2, 6)) == 5

    def test_requires_rho_zero(self):
        with pytest.raises(ComputationError) as exc:
            series_count(BNParams(15, 3, 16))
        assert exc.value.code == "E120"

    def test_dual_has_same_count(self):
        assert series_count(serre_dual(GENUS_15)) == 6006


class TestSerreDual:
    """Tests for serre_dual."""

    def test_genus_15(self):
        assert serre_dual(GENUS_15).as_tuple() == (15, 2, 12)

    def test_is_involution(self):
        assert serre_dual(serre_dual(GENUS_15)) == GENUS_15

    def test_negative_dual(self):
        with pytest.raises(ComputationError) as exc:
            serre_dual(BNParams(3, 0, 5))
        assert exc.value.code == "E121"


class TestRiemannRoch:
    """Tests for riemann_roch_h0."""

    def test_nonspecial(self):
        assert riemann_roch_h0(15, 32, 0) == 18

    def test_negative_h1(self):
        with pytest.raises(ComputationError) as exc:
            riemann_roch_h0(15, 16, -1)
        assert exc.value.code == "E100"

    def test_negative_result(self):
        with pytest.raises(ComputationError) as exc:
            riemann_roch_h0(15, 2, 0)
        assert exc.value.code == "E122"


class TestDimensionBalance:
    """Tests for mult_map_dimension_balance."""

    def test_genus_15_balances(self):
        balance = mult_map_dimension_balance(15, 4, 16, GENERIC_TWIST_H0)
        assert tuple(balance) == (18, 18)
        assert balance.balanced
        assert balance.excess == 0

    def test_extra_section_breaks_balance(self):
        balance = mult_map_dimension_balance(15, 4, 16, 3)
        assert balance.excess == 3
        assert not balance.balanced

    def test_requires_rho_zero(self):
        with pytest.raises(ComputationError) as exc:
            mult_map_dimension_balance(15, 5, 16, 2)
        assert exc.value.code == "E120"

    def test_negative_twist(self):
        with pytest.raises(ComputationError) as exc:
            mult_map_dimension_balance(15, 4, 16, -1)
        assert exc.value.code == "E100"


class TestPetriChain:
    """Tests for petri_chain."""

    def test_tetragonal_genus_15(self):
        report = petri_chain(4, 4)
        assert report.g_check == 15
        assert [h0 for _, h0 in report.chain] == [15, 12, 9, 6, 3, 0]

    def test_every_step_balances(self):
        for k in range(3, 11):
            for r in range(1, 9):
                report = petri_chain(k, r)
                assert report.all_balanced
                assert len(report.balances) == r + 1

    def test_first_step_dimensions(self):
        first = petri_chain(4, 4).balances[0]
        assert (first.kernel, first.middle, first.target) == (12, 30, 18)

    def test_chain_is_arithmetic(self):
        """Consecutive section counts drop by k - 1, ending at zero."""
        for k in range(3, 11):
            for r in range(1, 9):
                values = [h0 for _, h0 in petri_chain(k, r).chain]
                assert {a - b for a, b in zip(values, values[1:], strict=False)} == {k - 1}
                assert values[0] == (k - 1) * (r + 1)
                assert values[-1] == 0

    def test_gonality_too_small(self):
        with pytest.raises(ComputationError) as exc:
            petri_chain(2, 4)
        assert exc.value.code == "E123"

    def test_r_too_small(self):
        with pytest.raises(ComputationError) as exc:
            petri_chain(4, 0)
        assert exc.value.code == "E100"


class TestWirtingerJump:
    """Tests for delta0pp_jump."""

    def test_r4(self):
        report = delta0pp_jump(4)
        assert tuple(report) == (4, 2, 2)
        assert report.has_jump

    def test_no_jump_for_pencils(self):
        report = delta0pp_jump(1)
        assert report.jump == -1
        assert not report.has_jump

    def test_invalid_r(self):
        with pytest.raises(ComputationError):
            delta0pp_jump(0)


class TestExcludedLoci:
    """Tests for excluded_loci_codimension."""

    def test_genus_15(self):
        loci = excluded_loci_codimension(GENUS_15)
        assert tuple(loci) == (-9, -5)
        assert loci.codimension_at_least_two

    def test_requires_rho_zero(self):
        with pytest.raises(ComputationError) as exc:
            excluded_loci_codimension(BNParams(15, 3, 16))
        assert exc.value.code == "E120"


class TestIrreducibility:
    """Tests for irreducibility_criterion."""

    def test_genus_15_via_plane_models(self):
        report = irreducibility_criterion(GENUS_15)
        assert report.case == "severi"
        assert report.via_dual
        assert report.dual_r == 2
        assert report.component_dimension == 42

    def test_pencils_directly(self):
        report = irreducibility_criterion(BNParams(4, 1, 3))
        assert report.case == "hurwitz"
        assert not report.via_dual

    def test_no_case_applies(self):
        """(g, r, d) = (16, 3, 15) has r = r' = 3."""
        report = irreducibility_criterion(BNParams(16, 3, 15))
        assert report.case is None
        assert not report.applies

    def test_small_genus(self):
        with pytest.raises(ComputationError) as exc:
            irreducibility_criterion(BNParams(2, 0, 0))
        assert exc.value.code == "E100"


class TestBijectivityBookkeeping:
    """Tests for bijectivity_bookkeeping."""

    def test_genus_15(self):
        b = bijectivity_bookkeeping(15, 4)
        assert (b.sym2_theta, b.h0_canonical, b.h0_square, b.complement_dim) == (15, 15, 18, 3)
        assert b.twist_h0 == 2
        assert b.sym2_twist == 3
        assert b.quadric_free_possible
        assert b.bijective_by_count

    def test_twist_bounds_meet(self):
        """h0(L ⊗ η) <= h0(ϑ ⊗ η) + 2 and Riemann-Roch gives >= 2."""
        b = bijectivity_bookkeeping(15, 4)
        assert b.twist_upper_bound == THETA_TWIST_H0 + TWO_POINT_SECTIONS == 2
        assert b.twist_lower_bound == 2

    def test_count_fails_off_genus(self):
        b = bijectivity_bookkeeping(16, 4)
        assert not b.quadric_free_possible
        assert not b.bijective_by_count

    def test_invalid_input(self):
        with pytest.raises(ComputationError):
            bijectivity_bookkeeping(2, 4)


def _rho_zero_triples(max_genus: int) -> list[BNParams]:
    return [
        BNParams(g, r, d)
        for g in range(2, max_genus + 1)
        for r in range(g + 1)
        for d in range(min(g + r - 1, 2 * g - 2) + 1)
        if rho(BNParams(g, r, d)) == 0
    ]


class TestSerreDualProperties:
    """Residuation preserves the Brill-Noether number and the count."""

    def test_rho_is_invariant(self):
        rng = random.Random(1516)
        for _ in range(500):
            g = rng.randint(2, 40)
            r = rng.randint(0, g)
            d = rng.randint(0, min(g + r - 1, 2 * g - 2))
            p = BNParams(g, r, d)
            assert rho(serre_dual(p)) == rho(p)
            assert serre_dual(serre_dual(p)) == p

    @pytest.mark.parametrize("p", _rho_zero_triples(12), ids=lambda p: str(p.as_tuple()))
    def test_count_is_invariant(self, p: BNParams):
        count = series_count(p)
        assert count >= 1
        assert series_count(serre_dual(p)) == count
