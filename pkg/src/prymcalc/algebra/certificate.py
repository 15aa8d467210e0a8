"""Bigness certificates for the canonical class of the Prym moduli space.

Two effective classes d1, d2 are combined as β·d1 + γ·d2 so that the
boundary coefficients match those of the canonical class. The λ coefficient
ε of the combination then has to stay below 13, leaving K = β·d1 + γ·d2 +
(13 - ε)λ + (effective), which is big.
"""

from dataclasses import dataclass
from fractions import Fraction

import sympy as sp

from prymcalc.algebra.exact import from_sympy, to_sympy
from prymcalc.algebra.picard import (
    D0P,
    D0PP,
    D0RAM,
    FOUR_COEFFICIENT_GENUS_LIMIT,
    LAMBDA,
    PrymDivisorClass,
    canonical_class_prym,
)
from prymcalc.errors import ComputationError
from prymcalc.logging import get_logger

logger = get_logger(__name__)

CANONICAL_LAMBDA = Fraction(13)
CANONICAL_TARGET = (Fraction(-2), Fraction(-3))


def companion_divisor_class() -> PrymDivisorClass:
    """The divisor D15:2, 5808λ - 924(δ0' + δ0'') - 990δ0ram = 924(44/7 λ - ... - 15/14 δ0ram)."""
    return PrymDivisorClass.from_slope_form(15, 5808, 924, 924, 990)


@dataclass(frozen=True)
class BignessCertificate:
    """Exact coefficients of β·d1 + γ·d2 = ελ - 2(δ0' + δ0'') - 3δ0ram and the verdict."""

    genus: int
    d1: PrymDivisorClass
    d2: PrymDivisorClass
    target: tuple[Fraction, Fraction]
    beta: Fraction | None
    gamma: Fraction | None
    epsilon: Fraction | None
    residual_lambda: Fraction | None
    verdict: bool
    reason: str

    @property
    def combination(self) -> PrymDivisorClass | None:
        if self.beta is None or self.gamma is None:
            return None
        return self.d1.scale(self.beta) + self.d2.scale(self.gamma)


def _is_symmetric(d: PrymDivisorClass) -> bool:
    return d.coefficient(D0P) == d.coefficient(D0PP)


def _equations(
    d1: PrymDivisorClass, d2: PrymDivisorClass, target: tuple[Fraction, Fraction]
) -> list[tuple[str, Fraction]]:
    # δ0' and δ0'' collapse to one equation when both inputs treat them alike
    keys = [D0P, D0RAM] if _is_symmetric(d1) and _is_symmetric(d2) else [D0P, D0PP, D0RAM]
    return [(key, target[1] if key == D0RAM else target[0]) for key in keys]


def _judge(
    genus: int, beta: Fraction, gamma: Fraction, epsilon: Fraction
) -> tuple[bool, str]:
    if beta <= 0 or gamma <= 0:
        return False, f"coefficients must be positive, got beta={beta}, gamma={gamma}"
    if epsilon >= CANONICAL_LAMBDA:
        return False, f"epsilon = {epsilon} is not below {CANONICAL_LAMBDA}"
    if genus > FOUR_COEFFICIENT_GENUS_LIMIT:
        return False, f"g = {genus} > {FOUR_COEFFICIENT_GENUS_LIMIT}: higher boundary unchecked"
    return True, "canonical class is big"


def solve_combination(
    d1: PrymDivisorClass,
    d2: PrymDivisorClass,
    target_boundary: tuple[Fraction, Fraction] = CANONICAL_TARGET,
) -> BignessCertificate:
    """
    Solve β·d1 + γ·d2 = ελ + t0(δ0' + δ0'') + t1·δ0ram exactly.

    With δ0' and δ0'' coefficients equal in both inputs this is a 2×2 system;
    otherwise δ0' and δ0'' give separate equations and an inconsistent
    system yields a certificate with verdict False.

    Raises:
        ComputationError: E110 for different genera, E160 for proportional boundary parts
    """
    if d1.genus != d2.genus:
        raise ComputationError("E110", f"genera {d1.genus} and {d2.genus}")
    target = (Fraction(target_boundary[0]), Fraction(target_boundary[1]))
    equations = _equations(d1, d2, target)

    matrix = sp.Matrix(
        [[to_sympy(d1.coefficient(key)), to_sympy(d2.coefficient(key))] for key, _ in equations]
    )
    rhs = sp.Matrix([to_sympy(value) for _, value in equations])
    if matrix.rank() < 2:
        raise ComputationError("E160", "boundary parts of d1 and d2 are proportional")

    try:
        solution, _ = matrix.gauss_jordan_solve(rhs)
    except ValueError:
        logger.debug("No exact combination matches %s", target, extra={"genus": d1.genus})
        return BignessCertificate(
            genus=d1.genus,
            d1=d1,
            d2=d2,
            target=target,
            beta=None,
            gamma=None,
            epsilon=None,
            residual_lambda=None,
            verdict=False,
            reason="no exact combination matches the three boundary coefficients",
        )

    beta, gamma = from_sympy(solution[0]), from_sympy(solution[1])
    epsilon = beta * d1.coefficient(LAMBDA) + gamma * d2.coefficient(LAMBDA)
    verdict, reason = _judge(d1.genus, beta, gamma, epsilon)
    logger.debug(
        "beta=%s gamma=%s epsilon=%s verdict=%s",
        beta,
        gamma,
        epsilon,
        verdict,
        extra={"genus": d1.genus},
    )
    return BignessCertificate(
        genus=d1.genus,
        d1=d1,
        d2=d2,
        target=target,
        beta=beta,
        gamma=gamma,
        epsilon=epsilon,
        residual_lambda=CANONICAL_LAMBDA - epsilon,
        verdict=verdict,
        reason=reason,
    )


def verify_general_type(g: int, d1: PrymDivisorClass, d2: PrymDivisorClass) -> BignessCertificate:
    """
    Certify bigness of the canonical class from two effective classes.

    For g <= 23 only the λ, δ0', δ0'' and δ0ram coefficients matter.

    Raises:
        ComputationError: E161 for g > 23, E110 for inputs of another genus,
            E100 for inputs with higher boundary terms
    """
    if g > FOUR_COEFFICIENT_GENUS_LIMIT:
        raise ComputationError("E161", f"g = {g}")
    for d in (d1, d2):
        if d.genus != g:
            raise ComputationError("E110", f"class of genus {d.genus}, expected {g}")
        if d.higher_boundary():
            raise ComputationError("E100", "inputs must be supported on λ and the δ0-type classes")
    canonical = canonical_class_prym(g)
    target = (canonical.coefficient(D0P), canonical.coefficient(D0RAM))
    return solve_combination(d1, d2, target)


def verify_certificate(cert: BignessCertificate) -> bool:
    """
    Re-check a certificate from its stored fields without solving anything.

    Returns:
        The recomputed verdict

    Raises:
        ComputationError: E162 when the stored fields contradict each other
    """
    if cert.beta is None or cert.gamma is None or cert.epsilon is None:
        if cert.verdict:
            raise ComputationError("E162", "a positive verdict needs beta, gamma and epsilon")
        return False

    combination = cert.d1.scale(cert.beta) + cert.d2.scale(cert.gamma)
    expected = PrymDivisorClass(
        cert.genus,
        {
            LAMBDA: cert.epsilon,
            D0P: cert.target[0],
            D0PP: cert.target[0],
            D0RAM: cert.target[1],
        },
    )
    if combination != expected:
        raise ComputationError("E162", f"beta*d1 + gamma*d2 = {combination}, expected {expected}")
    if cert.residual_lambda is not None and cert.residual_lambda != CANONICAL_LAMBDA - cert.epsilon:
        raise ComputationError("E162", f"residual {cert.residual_lambda} != 13 - {cert.epsilon}")

    verdict, _ = _judge(cert.genus, cert.beta, cert.gamma, cert.epsilon)
    if verdict != cert.verdict:
        raise ComputationError("E162", f"stored verdict {cert.verdict}, recomputed {verdict}")
    return verdict
