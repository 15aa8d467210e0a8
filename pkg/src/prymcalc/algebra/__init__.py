"""Exact computations behind the divisor-class argument on the Prym moduli space."""

from prymcalc.algebra.brill_noether import (
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
from prymcalc.algebra.certificate import (
    BignessCertificate,
    companion_divisor_class,
    solve_combination,
    verify_certificate,
    verify_general_type,
)
from prymcalc.algebra.exact import (
    RationalPolynomial,
    binomial_polynomial,
    format_rational,
    parse_rational,
    rational_arith,
)
from prymcalc.algebra.grr import (
    BaseClassExpr,
    BundleKind,
    FiberClassExpr,
    c1_pushforward_bundle,
    chern_character_line,
    fiber_mul,
    fiber_pushforward_deg1,
    todd_factor,
)
from prymcalc.algebra.hilbert import (
    GradedFreeResolution,
    SurfaceInvariants,
    adjunction_curve,
    bicanonical_count,
    hilbert_polynomial_of_quotient,
    ideal_section_count,
    quotient_section_count,
    surface_invariants,
)
from prymcalc.algebra.picard import (
    FiberCensus,
    ModuliDivisorClass,
    PrymDivisorClass,
    boundary_fiber_census,
    canonical_class_prym,
    factored_form,
    pullback_pi,
    pushforward_pi,
    slope_inequalities,
)
from prymcalc.algebra.porteous import (
    SigmaPushforwardTable,
    VirtualDivisorClass,
    degeneration_correction,
    sigma_pushforward,
    sigma_table,
    sym2_c1,
    virtual_divisor_class,
    z1_class,
)

__all__ = [
    # Exact arithmetic
    "RationalPolynomial",
    "parse_rational",
    "format_rational",
    "rational_arith",
    "binomial_polynomial",
    # Divisor classes
    "ModuliDivisorClass",
    "PrymDivisorClass",
    "FiberCensus",
    "pullback_pi",
    "pushforward_pi",
    "canonical_class_prym",
    "slope_inequalities",
    "boundary_fiber_census",
    "factored_form",
    # Brill-Noether
    "BNParams",
    "rho",
    "series_count",
    "serre_dual",
    "riemann_roch_h0",
    "mult_map_dimension_balance",
    "petri_chain",
    "delta0pp_jump",
    "excluded_loci_codimension",
    "irreducibility_criterion",
    "bijectivity_bookkeeping",
    # GRR
    "FiberClassExpr",
    "BaseClassExpr",
    "BundleKind",
    "fiber_mul",
    "chern_character_line",
    "todd_factor",
    "fiber_pushforward_deg1",
    "c1_pushforward_bundle",
    # Porteous
    "SigmaPushforwardTable",
    "VirtualDivisorClass",
    "sym2_c1",
    "z1_class",
    "sigma_table",
    "sigma_pushforward",
    "virtual_divisor_class",
    "degeneration_correction",
    # Resolutions
    "GradedFreeResolution",
    "SurfaceInvariants",
    "hilbert_polynomial_of_quotient",
    "ideal_section_count",
    "quotient_section_count",
    "surface_invariants",
    "adjunction_curve",
    "bicanonical_count",
    # Certificates
    "BignessCertificate",
    "companion_divisor_class",
    "solve_combination",
    "verify_general_type",
    "verify_certificate",
]
