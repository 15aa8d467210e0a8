"""Tests for resolutions, Hilbert polynomials and section counts."""

import pytest

from prymcalc.algebra.exact import format_polynomial
from prymcalc.algebra.hilbert import (
    GradedFreeResolution,
    ResolutionTerm,
    adjunction_curve,
    bicanonical_count,
    hilbert_polynomial_of_quotient,
    ideal_section_count,
    line_bundle_cohomology,
    quotient_section_count,
    surface_invariants,
)
from prymcalc.errors import ComputationError
from prymcalc.schemas import ResolutionSchema, load_builtin_resolution, load_resolution


@pytest.fixture
def pfaffian() -> GradedFreeResolution:
    return load_builtin_resolution("pfaffian_14_6")


@pytest.fixture
def plane_conic() -> GradedFreeResolution:
    return GradedFreeResolution(2, (ResolutionTerm(0, (-2,)),), "conic")


class TestResolution:
    """Tests for GradedFreeResolution."""

    def test_builtin_loads_with_prefix(self, pfaffian):
        assert load_builtin_resolution("builtin:pfaffian_14_6") == pfaffian
        assert pfaffian.ambient_dim == 5
        assert pfaffian.length == 2

    def test_unknown_builtin(self):
        with pytest.raises(ComputationError) as exc:
            load_builtin_resolution("builtin:cubic_fourfold")
        assert exc.value.code == "E150"

    def test_indices_must_be_consecutive(self):
        with pytest.raises(ComputationError) as exc:
            GradedFreeResolution(5, (ResolutionTerm(0, (-3,)), ResolutionTerm(2, (-7,))))
        assert exc.value.code == "E150"

    def test_empty_term(self):
        with pytest.raises(ComputationError) as exc:
            GradedFreeResolution(5, (ResolutionTerm(0, ()),))
        assert exc.value.code == "E150"

    def test_builtin_goes_through_schema(self, pfaffian):
        """The bundled file and a JSON dump of it load to the same resolution."""
        text = ResolutionSchema.from_resolution(pfaffian).model_dump_json()
        assert load_resolution(text, name="pfaffian_14_6") == pfaffian

    def test_missing_ambient(self):
        with pytest.raises(ComputationError) as exc:
            load_resolution('{"terms": []}')
        assert exc.value.code == "E170"


class TestLineBundleCohomology:
    """Tests for line_bundle_cohomology."""

    def test_sections(self):
        assert line_bundle_cohomology(5, 2, 0) == 21

    def test_top_cohomology(self):
        assert line_bundle_cohomology(1, -3, 1) == 2

    def test_intermediate_vanishes(self):
        assert line_bundle_cohomology(5, -7, 2) == 0


class TestHilbertPolynomial:
    """Tests for hilbert_polynomial_of_quotient."""

    def test_pfaffian(self, pfaffian):
        assert format_polynomial(hilbert_polynomial_of_quotient(pfaffian)) == "7*t^2 - 7*t + 7"

    def test_plane_conic(self, plane_conic):
        assert format_polynomial(hilbert_polynomial_of_quotient(plane_conic)) == "2*t + 1"

    def test_agrees_with_section_counts(self, pfaffian):
        """χ(O_S(t)) = h0(O_S(t)) once higher cohomology vanishes."""
        poly = hilbert_polynomial_of_quotient(pfaffian)
        for t in range(2, 6):
            assert poly.evaluate(t) == quotient_section_count(pfaffian, t)


class TestSectionCounts:
    """Tests for ideal_section_count and quotient_section_count."""

    def test_no_quadrics(self, pfaffian):
        assert ideal_section_count(pfaffian, 2) == 0
        assert quotient_section_count(pfaffian, 2) == 21

    def test_seven_cubics(self, pfaffian):
        assert ideal_section_count(pfaffian, 3) == 7

    def test_quartics(self, pfaffian):
        assert ideal_section_count(pfaffian, 4) == 35
        assert quotient_section_count(pfaffian, 4) == 91

    def test_conic(self, plane_conic):
        assert ideal_section_count(plane_conic, 2) == 1
        assert quotient_section_count(plane_conic, 2) == 5

    def test_guard(self):
        res = GradedFreeResolution(1, (ResolutionTerm(0, (-2,)), ResolutionTerm(1, (-3,))))
        with pytest.raises(ComputationError) as exc:
            ideal_section_count(res, 0)
        assert exc.value.code == "E151"


class TestSurfaceInvariants:
    """Tests for surface_invariants and the adjunction bookkeeping."""

    def test_pfaffian(self, pfaffian):
        inv = surface_invariants(pfaffian)
        assert (inv.degree, inv.chi_O, inv.p_g, inv.q, inv.K_squared) == (14, 7, 6, 0, 14)

    def test_without_canonical_embedding(self, pfaffian):
        inv = surface_invariants(pfaffian, canonical_embedding=False)
        assert inv.K_squared is None
        with pytest.raises(ComputationError):
            bicanonical_count(inv)

    def test_bicanonical(self, pfaffian):
        inv = surface_invariants(pfaffian)
        assert bicanonical_count(inv) == 21 == quotient_section_count(pfaffian, 2)

    def test_not_a_surface(self, plane_conic):
        with pytest.raises(ComputationError) as exc:
            surface_invariants(plane_conic)
        assert exc.value.code == "E152"

    def test_adjunction(self):
        curve = adjunction_curve(14)
        assert tuple(curve) == (15, 14)

    def test_adjunction_negative(self):
        with pytest.raises(ComputationError):
            adjunction_curve(-1)
