"""Divisor classes on the moduli of curves and of Prym curves.

Classes are sparse vectors over named basis keys:

* moduli of curves: ``lambda``, ``d0``, ``d1``, ..., ``d{g//2}``
* Prym moduli: ``lambda``, ``d0p``, ``d0pp``, ``d0ram`` and, for each
  ``1 <= i <= g//2``, the keys ``d{i}``, ``d{g-i}`` and ``d{i}:{g-i}``.

Keys are symbolic so that vectors of different genera never line up silently.
"""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Literal, Self

from prymcalc.algebra.exact import RationalLike, format_rational, parse_rational
from prymcalc.errors import ComputationError
from prymcalc.logging import get_logger

logger = get_logger(__name__)

LAMBDA = "lambda"
D0P = "d0p"
D0PP = "d0pp"
D0RAM = "d0ram"

# Slope bounds for the canonical class 13λ - 2(δ0' + δ0'') - 3δ0ram - ...
SLOPE_BOUND = Fraction(13, 2)
SLOPE_BOUND_STRICT = Fraction(13, 3)

# Above this genus the four δ0-type coefficients no longer control the others
FOUR_COEFFICIENT_GENUS_LIMIT = 23


def moduli_basis(genus: int) -> tuple[str, ...]:
    """Basis keys of the divisor classes on the moduli of curves of this genus."""
    return (LAMBDA, *(f"d{i}" for i in range(genus // 2 + 1)))


def higher_boundary_keys(genus: int, i: int) -> tuple[str, ...]:
    """The distinct Prym boundary keys lying over δ_i, for 1 <= i <= g//2."""
    keys: list[str] = []
    for key in (f"d{i}", f"d{genus - i}", f"d{i}:{genus - i}"):
        if key not in keys:
            keys.append(key)
    return tuple(keys)


def prym_basis(genus: int) -> tuple[str, ...]:
    """Basis keys of the divisor classes on the Prym moduli space of this genus."""
    keys = [LAMBDA, D0P, D0PP, D0RAM]
    for i in range(1, genus // 2 + 1):
        keys.extend(k for k in higher_boundary_keys(genus, i) if k not in keys)
    return tuple(keys)


def boundary_index(genus: int, key: str) -> int:
    """Index i of the boundary divisor δ_i of the moduli of curves below a Prym key."""
    body = key[1:].split(":")[0]
    index = int(body)
    return min(index, genus - index)


class FormalVector:
    """Shared vector-space operations for the formal class types."""

    coefficients: Mapping[str, Fraction]

    def basis(self) -> tuple[str, ...]:
        raise NotImplementedError

    def _rebuild(self, coefficients: Mapping[str, Fraction]) -> Self:
        raise NotImplementedError

    def _normalize(self) -> None:
        basis = self.basis()
        clean: dict[str, Fraction] = {}
        for key, value in self.coefficients.items():
            if key not in basis:
                raise ComputationError("E110", f"key {key!r} not in basis")
            number = parse_rational(value)
            if number != 0:
                clean[key] = number
        object.__setattr__(self, "coefficients", MappingProxyType(clean))

    def coefficient(self, key: str) -> Fraction:
        if key not in self.basis():
            raise ComputationError("E110", f"key {key!r} not in basis")
        return self.coefficients.get(key, Fraction(0))

    def items(self) -> list[tuple[str, Fraction]]:
        """Nonzero entries in basis order."""
        return [(k, self.coefficients[k]) for k in self.basis() if k in self.coefficients]

    def _check_compatible(self, other: "FormalVector") -> None:
        if type(self) is not type(other) or self.basis() != other.basis():
            raise ComputationError("E110", "vectors live on different bases")

    def __add__(self, other: Self) -> Self:
        self._check_compatible(other)
        merged = dict(self.coefficients)
        for key, value in other.coefficients.items():
            merged[key] = merged.get(key, Fraction(0)) + value
        return self._rebuild(merged)

    def __sub__(self, other: Self) -> Self:
        return self + other.scale(-1)

    def __neg__(self) -> Self:
        return self.scale(-1)

    def scale(self, factor: RationalLike) -> Self:
        number = parse_rational(factor)
        return self._rebuild({k: number * v for k, v in self.coefficients.items()})

    def __rmul__(self, factor: RationalLike) -> Self:
        return self.scale(factor)

    def is_zero(self) -> bool:
        return not self.coefficients

    def __eq__(self, other: object) -> bool:
        if type(self) is not type(other):
            return NotImplemented
        assert isinstance(other, FormalVector)
        return self.basis() == other.basis() and dict(self.coefficients) == dict(
            other.coefficients
        )

    def __hash__(self) -> int:
        return hash((self.basis(), frozenset(self.coefficients.items())))

    def __str__(self) -> str:
        return format_linear(self.items())


@dataclass(frozen=True, eq=False)
class ModuliDivisorClass(FormalVector):
    """Divisor class on the moduli space of stable curves of genus ``genus``."""

    genus: int
    coefficients: Mapping[str, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.genus < 2:
            raise ComputationError("E100", f"genus must be >= 2, got {self.genus}")
        self._normalize()

    def basis(self) -> tuple[str, ...]:
        return moduli_basis(self.genus)

    def _rebuild(self, coefficients: Mapping[str, Fraction]) -> "ModuliDivisorClass":
        return ModuliDivisorClass(self.genus, coefficients)

    @classmethod
    def generator(cls, genus: int, key: str) -> "ModuliDivisorClass":
        return cls(genus, {key: Fraction(1)})


@dataclass(frozen=True, eq=False)
class PrymDivisorClass(FormalVector):
    """Divisor class on the Prym moduli space of genus ``genus``."""

    genus: int
    coefficients: Mapping[str, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.genus < 2:
            raise ComputationError("E100", f"genus must be >= 2, got {self.genus}")
        self._normalize()

    def basis(self) -> tuple[str, ...]:
        return prym_basis(self.genus)

    def _rebuild(self, coefficients: Mapping[str, Fraction]) -> "PrymDivisorClass":
        return PrymDivisorClass(self.genus, coefficients)

    @classmethod
    def generator(cls, genus: int, key: str) -> "PrymDivisorClass":
        return cls(genus, {key: Fraction(1)})

    @classmethod
    def from_slope_form(
        cls,
        genus: int,
        lam: RationalLike,
        d0p: RationalLike,
        d0pp: RationalLike,
        d0ram: RationalLike,
    ) -> "PrymDivisorClass":
        """Class ``lam·λ - d0p·δ0' - d0pp·δ0'' - d0ram·δ0ram`` (boundary given positively)."""
        return cls(
            genus,
            {
                LAMBDA: parse_rational(lam),
                D0P: -parse_rational(d0p),
                D0PP: -parse_rational(d0pp),
                D0RAM: -parse_rational(d0ram),
            },
        )

    def higher_boundary(self) -> dict[str, Fraction]:
        return {k: v for k, v in self.coefficients.items() if k not in (LAMBDA, D0P, D0PP, D0RAM)}


# === rendering ===


def format_linear(terms: Iterable[tuple[str, Fraction]]) -> str:
    """Render ``[(label, coefficient), ...]`` as ``206382*lambda - 31020*d0p``.

    Consecutive ``d0p``/``d0pp`` entries with equal coefficients are grouped
    as ``c*(d0p + d0pp)``.
    """
    entries = [(label, value) for label, value in terms if value != 0]
    grouped: list[tuple[str, Fraction]] = []
    index = 0
    while index < len(entries):
        label, value = entries[index]
        if (
            label == D0P
            and index + 1 < len(entries)
            and entries[index + 1] == (D0PP, value)
        ):
            grouped.append(("(d0p + d0pp)", value))
            index += 2
            continue
        grouped.append((label, value))
        index += 1

    pieces: list[str] = []
    for label, value in grouped:
        magnitude = abs(value)
        body = label if magnitude == 1 else f"{format_rational(magnitude)}*{label}"
        if not pieces:
            pieces.append(f"-{body}" if value < 0 else body)
        else:
            pieces.append(f"- {body}" if value < 0 else f"+ {body}")
    return " ".join(pieces) if pieces else "0"


def factored_form(d: PrymDivisorClass) -> tuple[Fraction, PrymDivisorClass]:
    """
    Normalize a class by its δ0' coefficient.

    Returns ``(scale, normalized)`` with ``d = scale * normalized`` and the
    δ0' coefficient of ``normalized`` equal to -1.

    Raises:
        ComputationError: E100 when the δ0' coefficient is zero
    """
    b0 = -d.coefficient(D0P)
    if b0 == 0:
        raise ComputationError("E100", "cannot factor a class with zero d0p coefficient")
    return b0, d.scale(1 / b0)


def format_factored(d: PrymDivisorClass) -> str:
    """Render ``5808λ - 924(δ0'+δ0'') - 990δ0ram`` as ``924*(44/7*lambda - ...)``."""
    scale, normalized = factored_form(d)
    return f"{format_rational(scale)}*({format_linear(normalized.items())})"


# === the forgetful map π ===


def pullback_pi(c: ModuliDivisorClass) -> PrymDivisorClass:
    """
    Pull a class back along the forgetful map to the moduli of curves.

    λ ↦ λ, δ0 ↦ δ0' + δ0'' + 2δ0ram, δ_i ↦ δ_i + δ_{g-i} + δ_{i:g-i}.
    """
    genus = c.genus
    result: dict[str, Fraction] = {}

    def add(key: str, value: Fraction) -> None:
        result[key] = result.get(key, Fraction(0)) + value

    for key, value in c.coefficients.items():
        if key == LAMBDA:
            add(LAMBDA, value)
        elif key == "d0":
            add(D0P, value)
            add(D0PP, value)
            add(D0RAM, 2 * value)
        else:
            for prym_key in higher_boundary_keys(genus, int(key[1:])):
                add(prym_key, value)
    return PrymDivisorClass(genus, result)


def forgetful_degree(genus: int) -> int:
    """Degree 2^(2g) - 1 of the forgetful map."""
    return 2 ** (2 * genus) - 1


def pushforward_pi(
    c: PrymDivisorClass,
    higher_multiplicities: Mapping[str, RationalLike] | None = None,
) -> ModuliDivisorClass:
    """
    Push a Prym class forward to the moduli of curves.

    δ0' ↦ 2(2^(2g-2) - 1)δ0, δ0'' ↦ δ0, δ0ram ↦ 2^(2g-2)δ0, λ ↦ (2^(2g) - 1)λ.

    Args:
        c: Class to push forward
        higher_multiplicities: Optional multiplicity per higher boundary key;
            each key ``k`` then maps to ``multiplicity·δ_i``

    Raises:
        ComputationError: E111 for a higher boundary key without a multiplicity
            or E110 for a multiplicity given on a key that is not a higher boundary key
    """
    genus = c.genus
    quarter = 2 ** (2 * genus - 2)
    rules = {
        LAMBDA: (LAMBDA, Fraction(forgetful_degree(genus))),
        D0P: ("d0", Fraction(2 * (quarter - 1))),
        D0PP: ("d0", Fraction(1)),
        D0RAM: ("d0", Fraction(quarter)),
    }
    multiplicities = dict(higher_multiplicities or {})
    higher = set(prym_basis(genus)) - set(rules)
    unknown = sorted(set(multiplicities) - higher)
    if unknown:
        raise ComputationError("E110", f"multiplicities for non-higher-boundary keys {unknown}")

    result: dict[str, Fraction] = {}
    for key, value in c.coefficients.items():
        if key in rules:
            target, factor = rules[key]
        elif key in multiplicities:
            target, factor = f"d{boundary_index(genus, key)}", parse_rational(multiplicities[key])
        else:
            raise ComputationError("E111", f"no multiplicity known for {key!r}")
        result[target] = result.get(target, Fraction(0)) + factor * value
    return ModuliDivisorClass(genus, result)


# === canonical class and slopes ===


def canonical_class_prym(genus: int) -> PrymDivisorClass:
    """
    Canonical class of the Prym moduli space.

    13λ - 2(δ0' + δ0'') - 3δ0ram - 2Σ(δ_i + δ_{g-i} + δ_{i:g-i}) - (δ_1 + δ_{g-1} + δ_{1:g-1}).

    Raises:
        ComputationError: E112 for g < 4
    """
    if genus < 4:
        raise ComputationError("E112", f"g = {genus}")
    coefficients: dict[str, Fraction] = {
        LAMBDA: Fraction(13),
        D0P: Fraction(-2),
        D0PP: Fraction(-2),
        D0RAM: Fraction(-3),
    }
    for i in range(1, genus // 2 + 1):
        for key in higher_boundary_keys(genus, i):
            coefficients[key] = Fraction(-3 if i == 1 else -2)
    return PrymDivisorClass(genus, coefficients)


SlopeStatus = Literal["pass", "fail", "not applicable"]


@dataclass(frozen=True)
class SlopeCheck:
    """One inequality a/b < bound."""

    key: str
    boundary_coefficient: Fraction
    bound: Fraction
    ratio: Fraction | None
    status: SlopeStatus


@dataclass(frozen=True)
class SlopeReport:
    """All slope inequalities evaluated for one class."""

    genus: int
    lambda_coefficient: Fraction
    checks: tuple[SlopeCheck, ...]

    @property
    def all_pass(self) -> bool:
        return all(check.status == "pass" for check in self.checks)

    def check(self, key: str) -> SlopeCheck:
        for item in self.checks:
            if item.key == key:
                return item
        raise KeyError(key)


def _slope_keys(genus: int) -> list[tuple[str, Fraction]]:
    keys = [(D0P, SLOPE_BOUND), (D0PP, SLOPE_BOUND), (D0RAM, SLOPE_BOUND_STRICT)]
    if genus <= FOUR_COEFFICIENT_GENUS_LIMIT:
        return keys
    for i in range(1, genus // 2 + 1):
        bound = SLOPE_BOUND_STRICT if i == 1 else SLOPE_BOUND
        keys.extend((key, bound) for key in higher_boundary_keys(genus, i))
    return keys


def slope_inequalities(d: PrymDivisorClass) -> SlopeReport:
    """
    Evaluate a/b < 13/2 (δ0', δ0'', higher δ_i) and a/b < 13/3 (δ0ram, δ_1-type).

    For g <= 23 only the coefficients of λ, δ0', δ0'' and δ0ram are tested.
    A nonpositive boundary coefficient b makes its inequality not applicable.
    """
    a = d.coefficient(LAMBDA)
    checks: list[SlopeCheck] = []
    for key, bound in _slope_keys(d.genus):
        b = -d.coefficient(key)
        if b <= 0:
            checks.append(SlopeCheck(key, b, bound, None, "not applicable"))
            continue
        ratio = a / b
        checks.append(SlopeCheck(key, b, bound, ratio, "pass" if ratio < bound else "fail"))
    logger.debug(
        "Slope checks for %s: %s", d, [c.status for c in checks], extra={"genus": d.genus}
    )
    return SlopeReport(d.genus, a, tuple(checks))


# === boundary fibers ===


@dataclass(frozen=True)
class FiberCensus:
    """Prym structures over a general irreducible one-nodal curve of genus ``genus``."""

    genus: int
    count_d0p: int
    count_d0pp: int
    count_d0ram: int

    @property
    def distinct_structures(self) -> int:
        return self.count_d0p + self.count_d0pp + self.count_d0ram

    @property
    def sheet_count(self) -> int:
        """Sheets of the forgetful map, the ramified points counted twice."""
        return self.count_d0p + self.count_d0pp + 2 * self.count_d0ram


def boundary_fiber_census(genus: int) -> FiberCensus:
    """
    Count the Prym structures of each boundary type over a one-nodal curve.

    δ0': 2(2^(2g-2) - 1) (nontrivial on the normalization, two gluings each);
    δ0'': 1 (the Wirtinger cover); δ0ram: 2^(2g-2) (square roots of O(-p-q)).
    """
    if genus < 2:
        raise ComputationError("E100", f"genus must be >= 2, got {genus}")
    quarter = 2 ** (2 * genus - 2)
    return FiberCensus(genus, 2 * (quarter - 1), 1, quarter)
