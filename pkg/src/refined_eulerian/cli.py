"""Command-line front end: generate tables, render polynomials, run checks.

Exit codes: 0 success, 1 verification failure, 2 usage error.  All output is
byte-deterministic for fixed flags, except the millisecond timings inside
verification reports.
"""
from __future__ import annotations

import csv
import io
import json
from pathlib import Path

import click

from . import identities, triangles
from .algebra import BivariatePolynomial

_TRIANGLE_KINDS = {
    "eulerian": lambda n_max: triangles.eulerian_triangle(n_max).rows[1:],
    "a": lambda n_max: triangles.a_triangle(n_max).rows,
    "c": lambda n_max: triangles.c_triangle(n_max).rows,
}

_SEQUENCE_KINDS = {
    "euler": lambda n_max: triangles.euler_numbers(n_max).values,
    "catalan": lambda n_max: triangles.catalan_sequence(n_max).values,
}


def _emit(text: str, out: str | None) -> None:
    if out is None:
        click.echo(text, nl=False)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _json_dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _rows_to_csv(rows) -> str:
    width = max(len(row) for row in rows)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    for n, row in enumerate(rows, start=1):
        cells = [str(n)] + [str(v) for v in row] + [""] * (width - len(row))
        writer.writerow(cells)
    return buffer.getvalue()


@click.group()
@click.version_option(package_name="refined-eulerian")
def main() -> None:
    """Exact tables and identity checks for parity-refined descent statistics."""


@main.command()
@click.option("--kind", type=click.Choice(sorted(_TRIANGLE_KINDS)), required=True)
@click.option("--n-max", type=int, default=10, show_default=True)
@click.option(
    "--format", "fmt", type=click.Choice(["csv", "json", "text"]), default="text",
    show_default=True,
    help="bfile applies to single sequences only, not triangles.",
)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def triangle(kind: str, n_max: int, fmt: str, out: str | None) -> None:
    """Print rows 1..N-MAX of a triangle.

    CSV rows carry n in the first column; k is positional, with empty
    trailing cells padding short rows.
    """
    if n_max < 1:
        raise click.UsageError("--n-max must be at least 1")
    rows = _TRIANGLE_KINDS[kind](n_max)
    if fmt == "text":
        text = "\n".join(",".join(str(v) for v in row) for row in rows) + "\n"
    elif fmt == "csv":
        text = _rows_to_csv(rows)
    else:
        text = _json_dumps(
            {
                "kind": kind,
                "first_n": 1,
                "rows": [[str(v) for v in row] for row in rows],
            }
        )
    _emit(text, out)


def _poly_for_variant(variant: str, n: int) -> BivariatePolynomial:
    if variant == "refined":
        return triangles.refined_poly(n)
    if variant == "tilde":
        return triangles.tilde_poly(n)
    if variant == "row_p0":
        poly = triangles.odd_descent_polynomial(n)
        return BivariatePolynomial({(k, 0): c for k, c in enumerate(poly.coefficients)})
    poly = triangles.even_descent_polynomial(n)
    return BivariatePolynomial({(0, k): c for k, c in enumerate(poly.coefficients)})


@main.command()
@click.option("--n", type=int, required=True)
@click.option(
    "--variant",
    type=click.Choice(["refined", "tilde", "row_p0", "row_0q"]),
    default="refined",
    show_default=True,
)
@click.option(
    "--format", "fmt", type=click.Choice(["json", "text"]), default="text",
    show_default=True,
)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def poly(n: int, variant: str, fmt: str, out: str | None) -> None:
    """Print one polynomial: the bivariate A_n, its palindromic form, or a row.

    Canonical text orders monomials by total degree, then p-degree
    descending; JSON lists monomials as {i, j, coeff} with decimal-string
    coefficients.
    """
    if n < 0:
        raise click.UsageError("--n must be non-negative")
    value = _poly_for_variant(variant, n)
    if fmt == "text":
        text = value.to_text() + "\n"
    else:
        text = _json_dumps(
            {
                "variant": variant,
                "n": n,
                "monomials": [
                    {"i": i, "j": j, "coeff": str(c)}
                    for (i, j), c in value.sorted_terms()
                ],
            }
        )
    _emit(text, out)


@main.command()
@click.option("--kind", type=click.Choice(sorted(_SEQUENCE_KINDS)), required=True)
@click.option("--n-max", type=int, default=10, show_default=True)
@click.option(
    "--format", "fmt", type=click.Choice(["csv", "json", "bfile", "text"]),
    default="text", show_default=True,
)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def sequence(kind: str, n_max: int, fmt: str, out: str | None) -> None:
    """Print terms 0..N-MAX of a sequence; bfile emits "index value" lines."""
    if n_max < 0:
        raise click.UsageError("--n-max must be non-negative")
    values = _SEQUENCE_KINDS[kind](n_max)
    if fmt == "text":
        text = ",".join(str(v) for v in values) + "\n"
    elif fmt == "bfile":
        text = "".join(f"{n} {v}\n" for n, v in enumerate(values))
    elif fmt == "csv":
        text = "".join(f"{n},{v}\n" for n, v in enumerate(values))
    else:
        text = _json_dumps(
            {"kind": kind, "first_index": 0, "values": [str(v) for v in values]}
        )
    _emit(text, out)


def _verify_text(selection, n_max, oracle_cap, reports) -> str:
    lines = [f"verify: selection={','.join(selection)} n_max={n_max} oracle_cap={oracle_cap}"]
    for report in reports:
        lines.append(f"{report.status.upper():4} {report.identity} ({report.millis} ms)")
        if report.witness is not None:
            lines.append(f"     params: {report.witness.params}")
            lines.append(f"     lhs: {report.witness.lhs}")
            lines.append(f"     rhs: {report.witness.rhs}")
    passed = sum(1 for r in reports if r.passed)
    overall = "PASS" if passed == len(reports) else "FAIL"
    lines.append(f"result: {overall} ({passed}/{len(reports)})")
    return "\n".join(lines) + "\n"


@main.command()
@click.argument("ids", nargs=-1)
@click.option("--n-max", type=int, default=identities.DEFAULT_N_MAX, show_default=True)
@click.option(
    "--oracle-cap", type=int, default=identities.DEFAULT_ORACLE_CAP, show_default=True,
    help="Largest S_n swept exhaustively by oracle-backed checks.",
)
@click.option(
    "--format", "fmt", type=click.Choice(["text", "json"]), default="text",
    show_default=True,
)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.pass_context
def verify(ctx, ids: tuple[str, ...], n_max: int, oracle_cap: int, fmt: str, out: str | None) -> None:
    """Run identity checks (all of them, or the given IDS).

    Exits 0 when every selected check passes, 1 on any failure, 2 on a bad
    selection.
    """
    selection: str | tuple[str, ...]
    if not ids or ids == ("all",):
        selection = "all"
        echoed = ["all"]
    else:
        selection = ids
        echoed = list(ids)
    try:
        reports = identities.run_suite(selection, n_max=n_max, oracle_cap=oracle_cap)
    except identities.UnknownIdentityError as exc:
        raise click.UsageError(f"{exc}\nRun 'verify' with no IDS to check everything.")
    if fmt == "text":
        text = _verify_text(echoed, n_max, oracle_cap, reports)
    else:
        text = _json_dumps(
            {
                "selection": echoed,
                "n_max": n_max,
                "oracle_cap": oracle_cap,
                "status": "pass" if all(r.passed for r in reports) else "fail",
                "reports": [r.to_json_dict() for r in reports],
            }
        )
    _emit(text, out)
    if not all(r.passed for r in reports):
        ctx.exit(1)


if __name__ == "__main__":
    main()
