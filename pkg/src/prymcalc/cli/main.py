"""Main CLI entry point using Typer."""

import json
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path
from typing import Annotated

import typer
from pydantic import BaseModel
from rich.console import Console
from rich.table import Table

from prymcalc import __version__
from prymcalc.algebra.brill_noether import (
    BNParams,
    bijectivity_bookkeeping,
    delta0pp_jump,
    excluded_loci_codimension,
    irreducibility_criterion,
    mult_map_dimension_balance,
    petri_chain,
    rho,
    serre_dual,
    series_count,
)
from prymcalc.algebra.certificate import (
    companion_divisor_class,
    verify_certificate,
    verify_general_type,
)
from prymcalc.algebra.hilbert import (
    adjunction_curve,
    hilbert_polynomial_of_quotient,
    ideal_section_count,
    quotient_section_count,
    surface_invariants,
)
from prymcalc.algebra.picard import (
    FOUR_COEFFICIENT_GENUS_LIMIT,
    PrymDivisorClass,
    boundary_fiber_census,
    canonical_class_prym,
    forgetful_degree,
    slope_inequalities,
)
from prymcalc.algebra.porteous import degeneration_correction, virtual_divisor_class
from prymcalc.errors import ComputationError
from prymcalc.logging import get_logger, log_context
from prymcalc.report import build_paper_report, load_expected_table
from prymcalc.schemas import (
    BUILTIN_PREFIX,
    AdjunctionResponse,
    BalanceResponse,
    BijectivityResponse,
    CensusResponse,
    CertificateSchema,
    ChainResponse,
    CodimensionResponse,
    CountResponse,
    DualResponse,
    JumpResponse,
    PrymClassSchema,
    RhoResponse,
    SlopeReportSchema,
    SurfaceReportSchema,
    VirtualClassSchema,
    load_certificate,
    load_builtin_resolution,
    load_class,
    load_resolution,
)

logger = get_logger(__name__)

# Exit code when every value is computed but some disagree with the table
EXIT_MISMATCH = 2

BUILTIN_CLASSES = {
    "d15": lambda: virtual_divisor_class().numeric_part,
    "d15-2": companion_divisor_class,
}

app = typer.Typer(
    name="prym",
    help="Exact divisor-class computations on the moduli space of Prym curves.",
    add_completion=False,
)

JsonOption = Annotated[
    bool,
    typer.Option(
        "--json",
        "-j",
        help="Output as JSON.",
    ),
]


def version_callback(value: bool) -> None:
    """Print version and exit."""
    if value:
        typer.echo(f"prymcalc v{__version__}")
        raise typer.Exit()


@app.callback()
def main(
    version: Annotated[
        bool | None,
        typer.Option(
            "--version",
            "-V",
            help="Show version and exit.",
            callback=version_callback,
            is_eager=True,
        ),
    ] = None,
) -> None:
    """prym - recompute the general-type argument for genus 15 Prym curves."""
    pass


@contextmanager
def computation_errors(command: str, genus: int | None = None) -> Iterator[None]:
    """Turn ComputationError into exit code 1 with the error on stderr.

    Records logged inside the block carry ``command`` and, when known, ``genus``.
    """
    with log_context(command=command, genus=genus):
        try:
            yield
        except ComputationError as e:
            logger.warning("%s failed: %s", command, e, extra={"error_code": e.code})
            typer.echo(f"Error {e}", err=True)
            raise typer.Exit(1) from e


def emit(model: BaseModel) -> None:
    typer.echo(json.dumps(model.model_dump(by_alias=True), indent=2))


def read_text(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except OSError as e:
        raise ComputationError("E170", f"failed to read {path}: {e}") from e


def resolve_class(source: str) -> PrymDivisorClass:
    """``builtin:d15``, ``builtin:d15-2`` or a path to a class JSON file."""
    if source.startswith(BUILTIN_PREFIX):
        key = source.removeprefix(BUILTIN_PREFIX)
        if key not in BUILTIN_CLASSES:
            raise ComputationError(
                "E100", f"unknown builtin class {key!r}; available: {', '.join(BUILTIN_CLASSES)}"
            )
        return BUILTIN_CLASSES[key]()
    return load_class(read_text(Path(source)))


def key_value_table(title: str, rows: list[tuple[str, object]]) -> Table:
    table = Table(title=title)
    table.add_column("Quantity", style="cyan")
    table.add_column("Value", style="green")
    for name, value in rows:
        table.add_row(name, str(value))
    return table


# === Brill-Noether ===


@app.command("rho")
def rho_command(g: int, r: int, d: int, json_output: JsonOption = False) -> None:
    """Brill-Noether number rho(g, r, d) = g - (r+1)(g - d + r)."""
    with computation_errors("rho", genus=g):
        value = rho(BNParams(g, r, d))
    if json_output:
        emit(RhoResponse(g=g, r=r, d=d, rho=value))
        return
    typer.echo(str(value))


@app.command("count")
def count_command(g: int, r: int, d: int, json_output: JsonOption = False) -> None:
    """Number of g^r_d on a general curve when rho = 0 (N = 6006 for (15, 4, 16))."""
    with computation_errors("count", genus=g):
        value = series_count(BNParams(g, r, d))
    if json_output:
        emit(CountResponse(g=g, r=r, d=d, count=value))
        return
    typer.echo(str(value))


@app.command("dual")
def dual_command(g: int, r: int, d: int, json_output: JsonOption = False) -> None:
    """Residual series g^(g-d+r-1)_(2g-2-d)."""
    with computation_errors("dual", genus=g):
        dual = serre_dual(BNParams(g, r, d))
    if json_output:
        emit(DualResponse(g=g, r=r, d=d, dual_r=dual.r, dual_d=dual.d))
        return
    typer.echo(f"({dual.g}, {dual.r}, {dual.d})")


@app.command("chain")
def chain_command(k: int, r: int, json_output: JsonOption = False) -> None:
    """Section counts h0(ω ⊗ A^(-j)) on a general k-gonal curve of genus (k-1)(r+1)."""
    with computation_errors("chain"):
        report = petri_chain(k, r)
    response = ChainResponse.from_report(report)
    if json_output:
        emit(response)
        return

    console = Console()
    table = Table(title=f"Petri chain, k={k}, r={r}, g={response.g}")
    table.add_column("j", style="cyan")
    table.add_column("h0(ω ⊗ A^-j)", style="green")
    table.add_column("kernel")
    table.add_column("middle")
    table.add_column("target")
    table.add_column("balanced")
    balances = {b.j: b for b in response.balances}
    for row in response.chain:
        balance = balances.get(row.j)
        if balance is None:
            table.add_row(str(row.j), str(row.h0), "", "", "", "")
        else:
            table.add_row(
                str(row.j),
                str(row.h0),
                str(balance.kernel),
                str(balance.middle),
                str(balance.target),
                "[green]yes[/green]" if balance.balanced else "[red]no[/red]",
            )
    console.print(table)


@app.command("balance")
def balance_command(
    g: int, r: int, d: int, h0_twist: int, json_output: JsonOption = False
) -> None:
    """Dimensions of Sym²H0(L) ⊕ Sym²H0(L ⊗ η) and H0(L⊗²)."""
    with computation_errors("balance", genus=g):
        balance = mult_map_dimension_balance(g, r, d, h0_twist)
    if json_output:
        emit(
            BalanceResponse(
                g=g,
                r=r,
                d=d,
                h0_twist=h0_twist,
                lhs=balance.lhs,
                rhs=balance.rhs,
                balanced=balance.balanced,
            )
        )
        return
    typer.echo(f"({balance.lhs}, {balance.rhs})")


@app.command("jump")
def jump_command(r: int, json_output: JsonOption = False) -> None:
    """h0(C, L ⊗ η) on the Wirtinger boundary versus a general point."""
    with computation_errors("jump"):
        report = delta0pp_jump(r)
    if json_output:
        emit(
            JumpResponse(
                r=r,
                boundary_h0=report.boundary_h0,
                generic_h0=report.generic_h0,
                jump=report.jump,
                has_jump=report.has_jump,
            )
        )
        return
    typer.echo(f"({report.boundary_h0}, {report.generic_h0}, {report.jump})")


@app.command("bijectivity")
def bijectivity_command(g: int = 15, r: int = 4, json_output: JsonOption = False) -> None:
    """Section-count bookkeeping for L = ϑ(2x) from a theta characteristic with h0 = r + 1."""
    with computation_errors("bijectivity", genus=g):
        response = BijectivityResponse.from_bookkeeping(bijectivity_bookkeeping(g, r))
    if json_output:
        emit(response)
        return
    Console().print(
        key_value_table("Bijectivity bookkeeping", list(response.model_dump().items()))
    )


@app.command("codimension")
def codimension_command(g: int, r: int, d: int, json_output: JsonOption = False) -> None:
    """Brill-Noether numbers of the excluded loci and the irreducibility case."""
    with computation_errors("codimension", genus=g):
        p = BNParams(g, r, d)
        loci = excluded_loci_codimension(p)
        irreducibility = irreducibility_criterion(p)
    response = CodimensionResponse(
        g=g,
        r=r,
        d=d,
        rho_more_sections=loci.rho_more_sections,
        rho_lower_degree=loci.rho_lower_degree,
        codimension_at_least_two=loci.codimension_at_least_two,
        irreducibility_case=irreducibility.case,
        via_dual=irreducibility.via_dual,
        component_dimension=irreducibility.component_dimension,
    )
    if json_output:
        emit(response)
        return
    Console().print(key_value_table("Excluded loci", list(response.model_dump().items())))


# === Picard group ===


@app.command("census")
def census_command(g: int, json_output: JsonOption = False) -> None:
    """Prym structures of each boundary type over a one-nodal curve."""
    with computation_errors("census", genus=g):
        census = boundary_fiber_census(g)
    response = CensusResponse(
        genus=g,
        d0p=census.count_d0p,
        d0pp=census.count_d0pp,
        d0ram=census.count_d0ram,
        distinct_structures=census.distinct_structures,
        sheet_count=census.sheet_count,
        forgetful_degree=forgetful_degree(g),
    )
    if json_output:
        emit(response)
        return
    Console().print(key_value_table(f"Boundary census, g={g}", list(response.model_dump().items())))


@app.command("canonical")
def canonical_command(g: int, json_output: JsonOption = False) -> None:
    """Canonical class of the Prym moduli space."""
    with computation_errors("canonical", genus=g):
        k = canonical_class_prym(g)
    if json_output:
        emit(PrymClassSchema.from_class(k))
        return
    typer.echo(str(k))


@app.command("slopes")
def slopes_command(
    source: Annotated[
        str,
        typer.Argument(help="builtin:d15, builtin:d15-2 or a class JSON file."),
    ] = "builtin:d15",
    json_output: JsonOption = False,
) -> None:
    """Slope inequalities a/b < 13/2 and a/b < 13/3 for a divisor class."""
    with computation_errors("slopes"):
        report = slope_inequalities(resolve_class(source))
    response = SlopeReportSchema.from_report(report)
    if json_output:
        emit(response)
        return

    console = Console()
    table = Table(title=f"Slopes, g={report.genus}")
    table.add_column("Boundary", style="cyan")
    table.add_column("b")
    table.add_column("a/b")
    table.add_column("bound")
    table.add_column("status")
    for check in response.checks:
        colour = "green" if check.status == "pass" else "red"
        table.add_row(
            check.key,
            check.boundary_coefficient,
            check.ratio or "-",
            check.bound,
            f"[{colour}]{check.status}[/{colour}]",
        )
    console.print(table)
    if report.genus <= FOUR_COEFFICIENT_GENUS_LIMIT:
        console.print("[dim]Higher boundary coefficients are not needed for g <= 23.[/dim]")


# === degeneracy class ===


@app.command("class-d15")
def class_d15_command(
    correct_d0pp_order: Annotated[
        int,
        typer.Option(
            "--correct-d0pp-order",
            help="Subtract this order of degeneracy along δ0''.",
        ),
    ] = 0,
    downstairs: Annotated[
        bool,
        typer.Option(
            "--downstairs",
            help="Apply the correction after pushforward instead of before.",
        ),
    ] = False,
    json_output: JsonOption = False,
) -> None:
    """Virtual class of the genus 15 degeneracy divisor, expanded and factored."""
    with computation_errors("class-d15", genus=15):
        v = virtual_divisor_class()
        if correct_d0pp_order:
            v = degeneration_correction(v, order=correct_d0pp_order, downstairs=downstairs)
        response = VirtualClassSchema.from_virtual(v)
    if json_output:
        emit(response)
        return
    typer.echo(response.expanded_text)
    typer.echo(response.factored_text)


# === surfaces ===


@app.command("hilbert")
def hilbert_command(
    source: Annotated[
        str,
        typer.Argument(help="builtin:pfaffian_14_6 or a resolution JSON file."),
    ],
    json_output: JsonOption = False,
) -> None:
    """Hilbert polynomial of a quotient, plus surface invariants when it is a surface."""
    with computation_errors("hilbert"):
        if source.startswith(BUILTIN_PREFIX):
            res = load_builtin_resolution(source)
        else:
            res = load_resolution(read_text(Path(source)), name=Path(source).stem)
        poly = hilbert_polynomial_of_quotient(res)
        response = SurfaceReportSchema.build(
            poly,
            surface_invariants(res) if poly.degree == 2 else None,
            h0_ideal_2=ideal_section_count(res, 2),
            h0_quotient_2=quotient_section_count(res, 2),
            name=res.name,
        )
    if json_output:
        emit(response)
        return
    rows = [(key, value) for key, value in response.model_dump().items() if value is not None]
    Console().print(key_value_table(f"Quotient {response.name or ''}", rows))


@app.command("adjunction")
def adjunction_command(k_squared: int, json_output: JsonOption = False) -> None:
    """Genus and degree of a hyperplane section of a canonically embedded surface."""
    with computation_errors("adjunction"):
        curve = adjunction_curve(k_squared)
    if json_output:
        emit(
            AdjunctionResponse(
                K_squared=k_squared,
                curve_genus=curve.curve_genus,
                embedding_degree=curve.embedding_degree,
                canonical_degree=2 * curve.curve_genus - 2,
            )
        )
        return
    typer.echo(f"({curve.curve_genus}, {curve.embedding_degree})")


# === certificate ===


@app.command("certificate")
def certificate_command(
    d1: Annotated[
        str,
        typer.Option("--d1", help="First class: builtin name or class JSON file."),
    ] = "builtin:d15-2",
    d2: Annotated[
        str,
        typer.Option("--d2", help="Second class: builtin name or class JSON file."),
    ] = "builtin:d15",
    verify: Annotated[
        Path | None,
        typer.Option("--verify", help="Re-check a stored certificate instead of solving."),
    ] = None,
    json_output: JsonOption = False,
) -> None:
    """Solve β·d1 + γ·d2 = ελ - 2(δ0' + δ0'') - 3δ0ram and check ε < 13."""
    with computation_errors("certificate"):
        if verify is not None:
            cert = load_certificate(read_text(verify))
            verdict = verify_certificate(cert)
        else:
            first, second = resolve_class(d1), resolve_class(d2)
            cert = verify_general_type(first.genus, first, second)
            verdict = cert.verdict
    response = CertificateSchema.from_certificate(cert)
    if json_output:
        emit(response)
        return

    rows: list[tuple[str, object]] = [
        ("beta", response.beta),
        ("gamma", response.gamma),
        ("epsilon", response.epsilon),
        ("13 - epsilon", response.residual_lambda),
        ("verdict", verdict),
        ("reason", response.reason),
    ]
    Console().print(key_value_table(f"Bigness certificate, g={cert.genus}", rows))


# === paper report ===


@app.command("paper-report")
def paper_report_command(
    table_path: Annotated[
        Path | None,
        typer.Option(
            "--table",
            help="Expected-value table (default: PRYM_EXPECTED_TABLE or the bundled table).",
        ),
    ] = None,
    json_output: JsonOption = False,
) -> None:
    """Recompute every published value and diff it against the expected table."""
    with computation_errors("paper-report"):
        report = build_paper_report(load_expected_table(table_path))

    if json_output:
        emit(report)
    else:
        console = Console()
        table = Table(title="Paper report")
        table.add_column("Check", style="cyan")
        table.add_column("Computed")
        table.add_column("Expected")
        table.add_column("Match")
        for entry in report.entries:
            table.add_row(
                entry.name,
                entry.computed,
                entry.expected,
                "[green]✓[/green]" if entry.match else "[red]✗[/red]",
            )
        console.print(table)
        matched = sum(1 for entry in report.entries if entry.match)
        console.print(f"\nMatched: [green]{matched}[/green] / {len(report.entries)}")

    if not report.overall:
        raise typer.Exit(EXIT_MISMATCH)


if __name__ == "__main__":
    app()
