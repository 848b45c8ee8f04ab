"""Machine verification of the identity family, one named check per identity.

Each check returns an :class:`IdentityReport` carrying a stable id, the
parameter range tested, pass/fail status, and on failure a witness that
renders both sides in the canonical text form so mismatches are diffable.
Checks are exact (integer or rational equality) and deterministic.

Oracle-backed checks compare against exhaustive S_n sweeps up to
``oracle_cap`` (default 9; raising it to 10 costs a 10!-word sweep) and
against an independent reconstruction beyond it.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from .algebra import (
    BivariatePolynomial,
    RationalSubstitution,
    TruncatedSeries,
    UnivariatePolynomial,
    catalan_series,
    egf_eulerian,
    evaluate_at_series,
    is_palindromic,
    rational_sqrt,
)
from .permutations import (
    append_max,
    brute_a_count,
    brute_c_count,
    brute_refined_poly,
    descent_stats,
    permutations_no_even_descents,
    permutations_no_odd_descents,
    reflect_insert,
    reflect_insert_inverse,
    rotate_insert,
    rotate_insert_inverse,
)
from .triangles import (
    a_from_eulerian,
    a_row,
    c_coeffs,
    euler_from_eulerian,
    euler_numbers,
    eulerian_from_a,
    eulerian_polynomial,
    eulerian_row,
    even_descent_polynomial,
    next_refined_from,
    odd_descent_polynomial,
    refined_polys,
    tilde_poly,
)

__all__ = [
    "DEFAULT_N_MAX",
    "DEFAULT_ORACLE_CAP",
    "DEFAULT_GUARD",
    "Witness",
    "IdentityReport",
    "GfSubstitution",
    "UnknownIdentityError",
    "check_convolution_recurrence",
    "check_substitution_closed_form",
    "check_row_symmetry",
    "check_palindromicity",
    "check_special_rows",
    "check_catalan_series_q0",
    "check_egf_rational_points",
    "check_egf_differential_equations",
    "check_eulerian_conversions",
    "check_euler_evaluation",
    "check_tangent_rows",
    "check_euler_eulerian",
    "check_triangle_recurrences",
    "check_insertion_bijections",
    "identity_ids",
    "run_suite",
]

DEFAULT_N_MAX = 20
DEFAULT_ORACLE_CAP = 9
DEFAULT_GUARD = 6

_ONE = BivariatePolynomial.one()
_P_PLUS_Q = BivariatePolynomial.variable_p() + BivariatePolynomial.variable_q()
_ONE_PLUS_PQ = _ONE + BivariatePolynomial({(1, 1): 1})
_ONE_PLUS_P = _ONE + BivariatePolynomial.variable_p()


@dataclass(frozen=True)
class Witness:
    """Where a check failed: offending parameters plus both rendered sides."""

    params: dict
    lhs: str
    rhs: str

    def to_json_dict(self) -> dict:
        return {"params": dict(self.params), "lhs": self.lhs, "rhs": self.rhs}


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    params: dict
    status: str  # "pass" | "fail"
    witness: Optional[Witness]
    millis: int

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json_dict(self) -> dict:
        return {
            "id": self.identity,
            "range": dict(self.params),
            "status": self.status,
            "witness": self.witness.to_json_dict() if self.witness else None,
            "millis": self.millis,
        }


class UnknownIdentityError(ValueError):
    """A verification run named an identity id that is not registered."""


def _report(identity: str, params: dict, finder: Callable[[], Optional[Witness]]) -> IdentityReport:
    start = time.perf_counter()
    witness = finder()
    millis = int((time.perf_counter() - start) * 1000)
    return IdentityReport(
        identity=identity,
        params=params,
        status="pass" if witness is None else "fail",
        witness=witness,
        millis=millis,
    )


def _poly_witness(params: dict, lhs: BivariatePolynomial, rhs: BivariatePolynomial) -> Witness:
    return Witness(params=params, lhs=lhs.to_text(), rhs=rhs.to_text())


def _reconstructed_poly(n: int) -> BivariatePolynomial:
    """A_n rebuilt from the even-descent row through the clearing substitution.

    Independent of the convolution generator: the row comes from the
    triangle recurrences, and the substitution is plain polynomial algebra.
    """
    if n == 0:
        return _ONE
    sub = RationalSubstitution(_P_PLUS_Q, _ONE_PLUS_PQ, (n - 1) // 2)
    base = sub.apply(even_descent_polynomial(n))
    return base if n % 2 else _ONE_PLUS_P * base


def check_convolution_recurrence(
    n_max: int, oracle_cap: int = DEFAULT_ORACLE_CAP
) -> IdentityReport:
    """The two parity convolution recurrences, against independent sides.

    Up to the oracle cap the reference polynomials come from exhaustive
    sweeps; beyond it they are rebuilt from the even-descent triangle.  The
    recurrence step is then required to reproduce each reference row from
    the lower reference rows exactly.
    """
    params = {"n_max": n_max, "oracle_cap": oracle_cap}

    def find() -> Optional[Witness]:
        refs = [_ONE, _ONE]
        for n in range(2, n_max + 1):
            refs.append(
                brute_refined_poly(n, cap=oracle_cap)
                if n <= oracle_cap
                else _reconstructed_poly(n)
            )
        for n in range(2, n_max + 1):
            stepped = next_refined_from(refs[:n])
            if stepped != refs[n]:
                return _poly_witness({"n": n}, refs[n], stepped)
        return None

    return _report("convolution-recurrence", params, find)


def check_substitution_closed_form(n_max: int) -> IdentityReport:
    """A_n(p, q) as a (p+q)/(1+pq) substitution into its single-variable rows."""
    params = {"n_max": n_max}

    def find() -> Optional[Witness]:
        for n in range(1, n_max + 1):
            half = n // 2
            tilde_sub = RationalSubstitution(_P_PLUS_Q, _ONE_PLUS_PQ, half)
            lhs = tilde_poly(n)
            rhs = tilde_sub.apply(odd_descent_polynomial(n))
            if lhs != rhs:
                return _poly_witness({"n": n, "form": "palindromic"}, lhs, rhs)
            lhs = refined_polys(n)[n]
            rhs = _reconstructed_poly(n)
            if lhs != rhs:
                return _poly_witness({"n": n, "form": "parity-split"}, lhs, rhs)
        return None

    return _report("substitution-closed-form", params, find)


def check_row_symmetry(n_max: int) -> IdentityReport:
    """A_n(p, 0) vs A_n(0, p): equal for odd n, off by (1+p) for even n.

    Both restrictions are also pinned to the recurrence-generated rows, so a
    drifting triangle cannot hide behind a self-consistent polynomial.
    """
    params = {"n_max": n_max}
    one_plus_x = UnivariatePolynomial((1, 1))

    def find() -> Optional[Witness]:
        for n in range(1, n_max + 1):
            poly = refined_polys(n)[n]
            at_q0 = poly.substitute_q(0)
            at_p0 = poly.substitute_p(0)
            expected = at_p0 if n % 2 else one_plus_x * at_p0
            if at_q0 != expected:
                return Witness(
                    params={"n": n},
                    lhs=at_q0.to_text("p"),
                    rhs=expected.to_text("p"),
                )
            if at_p0 != even_descent_polynomial(n):
                return Witness(
                    params={"n": n, "row": "even-descent"},
                    lhs=at_p0.to_text("q"),
                    rhs=even_descent_polynomial(n).to_text("q"),
                )
            if at_q0 != odd_descent_polynomial(n):
                return Witness(
                    params={"n": n, "row": "odd-descent"},
                    lhs=at_q0.to_text("p"),
                    rhs=odd_descent_polynomial(n).to_text("p"),
                )
        return None

    return _report("row-symmetry", params, find)


def check_palindromicity(n_max: int) -> IdentityReport:
    """The normalized polynomials are palindromic with center floor(n/2)."""
    params = {"n_max": n_max}

    def find() -> Optional[Witness]:
        for n in range(1, n_max + 1):
            poly = tilde_poly(n)
            if not is_palindromic(poly, n // 2):
                return Witness(
                    params={"n": n, "darga": n // 2},
                    lhs=poly.to_text(),
                    rhs="a polynomial palindromic of darga " + str(n // 2),
                )
        return None

    return _report("palindromicity", params, find)


def check_special_rows(n_max: int) -> IdentityReport:
    """The q=1 and p=1 rows collapse to scaled binomial powers."""
    params = {"n_max": n_max}
    one_plus_x = UnivariatePolynomial((1, 1))

    def find() -> Optional[Witness]:
        for n in range(1, n_max + 1):
            poly = refined_polys(n)[n]
            half = n // 2
            lhs = poly.substitute_q(1)
            rhs = one_plus_x**half * Fraction(math.factorial(n), 2**half)
            if lhs != rhs:
                return Witness({"n": n, "row": "q=1"}, lhs.to_text("p"), rhs.to_text("p"))
            half = (n - 1) // 2
            lhs = poly.substitute_p(1)
            rhs = one_plus_x**half * Fraction(math.factorial(n), 2**half)
            if lhs != rhs:
                return Witness({"n": n, "row": "p=1"}, lhs.to_text("q"), rhs.to_text("q"))
        return None

    return _report("special-rows", params, find)


def _catalan_substitution_series(n: int, order: int) -> TruncatedSeries:
    """Right side of the Catalan substitution for A_n(p, 0), truncated in p."""
    csq = catalan_series(order // 2).substitute_monomial(Fraction(1, 4), 2, order)
    u = csq.mul_monomial(Fraction(1, 2), 1)
    value = evaluate_at_series(eulerian_polynomial(n), u)
    if n % 2 == 0:
        value = value * u.add_scalar(1)
    return value * csq.pow(-(n // 2))


def check_catalan_series_q0(n_max: int, guard: int = DEFAULT_GUARD) -> IdentityReport:
    """The odd-descent row equals a truncated Catalan-composition series.

    For each target row the series is built at order (row index) + guard and
    must reproduce the polynomial with every guard coefficient zero, which
    separates genuine equality from agreement-up-to-truncation.
    """
    if guard < 2:
        raise ValueError("guard band must be at least 2 extra orders")
    params = {"n_max": n_max, "guard": guard}

    def find() -> Optional[Witness]:
        for half in range(0, n_max + 1):
            for n in (2 * half + 1, 2 * half + 2):
                order = n + guard
                rhs = _catalan_substitution_series(n, order)
                lhs = TruncatedSeries(order, odd_descent_polynomial(n).coefficients)
                if lhs != rhs:
                    return Witness({"n": n, "order": order}, lhs.to_text(), rhs.to_text())
        return None

    return _report("catalan-series-q0", params, find)


@dataclass(frozen=True)
class GfSubstitution:
    """An exact specialization point at which every EGF ingredient is rational.

    Invariants: y = (p+q) / (2(1+pq)) = x / (1+x^2), and scale is the
    positive rational square root of (1+pq) / (1+x^2).
    """

    p: Fraction
    q: Fraction
    x: Fraction
    y: Fraction
    scale: Fraction

    def __post_init__(self):
        denom = 2 * (1 + self.p * self.q)
        if denom == 0:
            raise ValueError("1 + pq must not vanish")
        if self.y != (self.p + self.q) / denom:
            raise ValueError("y does not match (p+q) / (2(1+pq))")
        if self.y != self.x / (1 + self.x * self.x):
            raise ValueError("y does not match x / (1+x^2)")
        if self.scale <= 0:
            raise ValueError("scale must be positive")
        if self.scale * self.scale != (1 + self.p * self.q) / (1 + self.x * self.x):
            raise ValueError("scale^2 does not match (1+pq) / (1+x^2)")

    @classmethod
    def build(cls, p, q, x) -> "GfSubstitution":
        p = Fraction(p)
        q = Fraction(q)
        x = Fraction(x)
        y = (p + q) / (2 * (1 + p * q))
        scale = rational_sqrt((1 + p * q) / (1 + x * x))
        return cls(p=p, q=q, x=x, y=y, scale=scale)


def default_egf_points() -> tuple[GfSubstitution, ...]:
    return (
        GfSubstitution.build(Fraction(24, 25), 0, Fraction(3, 4)),
        GfSubstitution.build(Fraction(1, 3), Fraction(1, 3), Fraction(1, 3)),
        GfSubstitution.build(0, 0, 0),
    )


def _parity_egf_sides(
    point: GfSubstitution, order: int
) -> tuple[TruncatedSeries, TruncatedSeries]:
    """(even, odd) closed-form EGF sides at the given point, truncated."""
    plus = egf_eulerian(point.x, point.scale, order)
    minus = egf_eulerian(point.x, -point.scale, order)
    even = (plus + minus).scale(Fraction(1, 2)).add_scalar(-1)
    even = even.scale((1 + point.x) / (1 + point.q))
    odd = (plus - minus).scale(Fraction(1, 2) / point.scale)
    return even, odd


def check_egf_rational_points(
    n_max: int, points: Optional[Sequence[GfSubstitution]] = None
) -> IdentityReport:
    """The parity-split EGFs match the polynomial EGF at rational points.

    Compares, coefficient by coefficient through t^(2*n_max+1), the closed
    forms built from the classical EGF against the series whose t^n
    coefficient is A_n(p, q) / n! evaluated at the point.
    """
    pts = tuple(points) if points is not None else default_egf_points()
    order = 2 * n_max + 1
    params = {"n_max": n_max, "t_order": order, "points": [str((pt.p, pt.q)) for pt in pts]}

    def find() -> Optional[Witness]:
        polys = refined_polys(order)
        for pt in pts:
            even_rhs, odd_rhs = _parity_egf_sides(pt, order)
            even_lhs = TruncatedSeries(
                order,
                [
                    polys[k].evaluate(pt.p, pt.q) / math.factorial(k)
                    if k % 2 == 0 and k >= 2
                    else 0
                    for k in range(order + 1)
                ],
            )
            odd_lhs = TruncatedSeries(
                order,
                [
                    polys[k].evaluate(pt.p, pt.q) / math.factorial(k) if k % 2 else 0
                    for k in range(order + 1)
                ],
            )
            if even_lhs != even_rhs:
                return Witness(
                    {"p": str(pt.p), "q": str(pt.q), "parity": "even"},
                    even_lhs.to_text(),
                    even_rhs.to_text(),
                )
            if odd_lhs != odd_rhs:
                return Witness(
                    {"p": str(pt.p), "q": str(pt.q), "parity": "odd"},
                    odd_lhs.to_text(),
                    odd_rhs.to_text(),
                )
        return None

    return _report("egf-rational-points", params, find)


def default_diffeq_points() -> tuple[tuple[Fraction, Fraction], ...]:
    return (
        (Fraction(2), Fraction(3)),
        (Fraction(0), Fraction(5)),
        (Fraction(1, 2), Fraction(1, 3)),
    )


def check_egf_differential_equations(
    n_max: int, points: Optional[Sequence[tuple[Fraction, Fraction]]] = None
) -> IdentityReport:
    """The three first-order relations between the parity EGFs, as series.

    At exact rational (p, q) the even and odd EGFs are truncated series;
    their formal derivatives must satisfy the quadratic relations, including
    the symmetrized odd one (which needs p != -1).
    """
    pts = tuple(points) if points is not None else default_diffeq_points()
    order = 2 * n_max + 1
    params = {"n_max": n_max, "t_order": order, "points": [str(pt) for pt in pts]}

    def find() -> Optional[Witness]:
        polys = refined_polys(order)
        for p0, q0 in pts:
            if p0 == -1:
                raise ValueError("the symmetrized relation needs p != -1")
            values = [poly.evaluate(p0, q0) for poly in polys]
            swapped = [poly.evaluate(q0, p0) for poly in polys]
            even = TruncatedSeries(
                order,
                [
                    values[k] / math.factorial(k) if k % 2 == 0 and k >= 2 else 0
                    for k in range(order + 1)
                ],
            )
            even_swap = TruncatedSeries(
                order,
                [
                    swapped[k] / math.factorial(k) if k % 2 == 0 and k >= 2 else 0
                    for k in range(order + 1)
                ],
            )
            odd = TruncatedSeries(
                order,
                [values[k] / math.factorial(k) if k % 2 else 0 for k in range(order + 1)],
            )
            trimmed = order - 1
            cases = (
                (
                    "even-derivative",
                    even.derivative(),
                    (odd * even.scale(p0 + q0).add_scalar(1 + p0)).truncate(trimmed),
                ),
                (
                    "odd-derivative",
                    odd.derivative(),
                    (
                        even.add_scalar(1)
                        + (even.add_scalar(1) * even_swap).scale(p0)
                        + (odd * odd).scale(q0)
                    ).truncate(trimmed),
                ),
                (
                    "odd-derivative-symmetrized",
                    odd.derivative(),
                    (
                        even.scale(1 + q0).add_scalar(1)
                        + (even * even).scale(
                            Fraction((1 + q0) * (p0 + q0), 2 * (1 + p0))
                        )
                        + (odd * odd).scale(Fraction(p0 + q0, 2))
                    ).truncate(trimmed),
                ),
            )
            for label, lhs, rhs in cases:
                if lhs != rhs:
                    return Witness(
                        {"p": str(p0), "q": str(q0), "relation": label},
                        lhs.to_text(),
                        rhs.to_text(),
                    )
        return None

    return _report("egf-differential-equations", params, find)


def check_eulerian_conversions(n_max: int) -> IdentityReport:
    """The six conversion sums reproduce the tables over their full index ranges."""
    params = {"n_max": n_max}

    def find() -> Optional[Witness]:
        euler = euler_numbers(n_max).values
        for n in range(1, n_max + 1):
            arow = a_row(n)
            erow = eulerian_row(n)
            half = (n - 1) // 2 if n % 2 else (n - 2) // 2
            for k in range(half + 1):
                got = a_from_eulerian(n, k)
                if got != arow[k]:
                    return Witness(
                        {"n": n, "k": k, "direction": "a-from-eulerian"},
                        str(arow[k]),
                        str(got),
                    )
                got = eulerian_from_a(n, k)
                if got != erow[k]:
                    return Witness(
                        {"n": n, "k": k, "direction": "eulerian-from-a"},
                        str(erow[k]),
                        str(got),
                    )
            got = euler_from_eulerian(n)
            if got != euler[n]:
                return Witness(
                    {"n": n, "direction": "euler-from-eulerian"}, str(euler[n]), str(got)
                )
        return None

    return _report("eulerian-conversions", params, find)


def check_euler_evaluation(n_max: int) -> IdentityReport:
    """A_n(0, -1) equals a signed zigzag number over a power of two."""
    params = {"n_max": n_max}

    def find() -> Optional[Witness]:
        euler = euler_numbers(n_max + 1).values
        for n in range(1, n_max + 1):
            lhs = even_descent_polynomial(n).evaluate(-1)
            if n % 2:
                m = (n - 1) // 2
                rhs = Fraction((-1) ** m * euler[n], 2**m)
            else:
                m = (n - 2) // 2
                rhs = Fraction((-1) ** m * euler[n + 1], 2 ** (m + 1))
            if lhs != rhs:
                return Witness({"n": n}, str(lhs), str(rhs))
        return None

    return _report("euler-evaluation", params, find)


def check_tangent_rows(n_max: int) -> IdentityReport:
    """A_n(p, -1) collapses to ((p-1)/2)-power rows scaled by tangent numbers."""
    params = {"n_max": n_max}
    half_down = UnivariatePolynomial((Fraction(-1, 2), Fraction(1, 2)))  # (p-1)/2
    half_up = UnivariatePolynomial((Fraction(1, 2), Fraction(1, 2)))  # (p+1)/2

    def find() -> Optional[Witness]:
        euler = euler_numbers(n_max + 1).values
        for n in range(1, n_max + 1):
            lhs = refined_polys(n)[n].substitute_q(-1)
            if n % 2:
                m = (n - 1) // 2
                rhs = half_down**m * euler[n]
            else:
                m = (n - 2) // 2
                rhs = half_up * half_down**m * euler[n + 1]
            if lhs != rhs:
                return Witness({"n": n}, lhs.to_text("p"), rhs.to_text("p"))
        return None

    return _report("tangent-rows", params, find)


def check_euler_eulerian(n_max: int) -> IdentityReport:
    """Zigzag numbers from the classical polynomials at q = -1.

    Odd-index values come from a signed evaluation of the odd rows, and the
    same values again from the derivative of the even rows, so the two
    routes cross-check each other against the boustrophedon table.
    """
    params = {"n_max": n_max}

    def find() -> Optional[Witness]:
        euler = euler_numbers(n_max + 1).values
        for n in range(0, (n_max - 1) // 2 + 1):
            lhs = euler[2 * n + 1]
            rhs = (-1) ** n * eulerian_polynomial(2 * n + 1).evaluate(-1)
            if lhs != rhs:
                return Witness({"n": 2 * n + 1, "route": "evaluation"}, str(lhs), str(rhs))
        for n in range(0, (n_max - 2) // 2 + 1):
            if 2 * n + 3 > n_max + 1:
                break
            lhs = euler[2 * n + 3]
            rhs = (-1) ** n * 2 * eulerian_polynomial(2 * n + 2).derivative().evaluate(-1)
            if lhs != rhs:
                return Witness({"n": 2 * n + 2, "route": "derivative"}, str(lhs), str(rhs))
        return None

    return _report("euler-eulerian", params, find)


def check_triangle_recurrences(
    n_max: int, oracle_cap: int = DEFAULT_ORACLE_CAP
) -> IdentityReport:
    """The even-descent triangle: sweeps, both recurrences, and the c-row form.

    Rows up to the oracle cap must match exhaustive counting; every stored
    row must satisfy the two-term and three-term steps, the equivalent form
    through the gamma rows, and the boundary values (leading 1, trailing
    zigzag number).
    """
    params = {"n_max": n_max, "oracle_cap": oracle_cap}

    def find() -> Optional[Witness]:
        euler = euler_numbers(n_max).values

        def arow(n: int, k: int) -> int:
            row = a_row(n)
            return row[k] if 0 <= k < len(row) else 0

        def crow(n: int, k: int) -> int:
            row = c_coeffs(n)
            return row[k] if 0 <= k < len(row) else 0

        for n in range(1, n_max + 1):
            row = a_row(n)
            if n <= oracle_cap:
                for k in range(len(row)):
                    counted = brute_a_count(n, k, cap=oracle_cap)
                    if counted != row[k]:
                        return Witness(
                            {"n": n, "k": k, "side": "sweep"}, str(counted), str(row[k])
                        )
                cs = c_coeffs(n)
                for k in range(len(cs)):
                    counted = brute_c_count(n, k, cap=oracle_cap)
                    if counted != cs[k]:
                        return Witness(
                            {"n": n, "k": k, "side": "sweep-gamma"}, str(counted), str(cs[k])
                        )
            if row[0] != 1:
                return Witness({"n": n, "boundary": "leading"}, str(row[0]), "1")
            if row[-1] != euler[n]:
                return Witness(
                    {"n": n, "boundary": "trailing"}, str(row[-1]), str(euler[n])
                )
            if n < 2:
                continue
            if n % 2 == 0:
                half = n // 2
                for k in range(len(row)):
                    expected = (half - k) * arow(n - 1, k - 1) + (k + 1) * arow(n - 1, k)
                    if row[k] != expected:
                        return Witness(
                            {"n": n, "k": k, "recurrence": "two-term"},
                            str(row[k]),
                            str(expected),
                        )
            else:
                half = (n - 1) // 2
                for k in range(len(row)):
                    expected = (
                        (half - k + 1) * arow(n - 1, k - 2)
                        + (half + 1) * arow(n - 1, k - 1)
                        + (k + 1) * arow(n - 1, k)
                    )
                    if row[k] != expected:
                        return Witness(
                            {"n": n, "k": k, "recurrence": "three-term"},
                            str(row[k]),
                            str(expected),
                        )
                for k in range(len(row)):
                    expected = (
                        (half - k + 1) * crow(n - 1, k - 1)
                        + k * crow(n - 1, k)
                        + arow(n - 1, k)
                    )
                    if row[k] != expected:
                        return Witness(
                            {"n": n, "k": k, "recurrence": "gamma-form"},
                            str(row[k]),
                            str(expected),
                        )
        return None

    return _report("triangle-recurrences", params, find)


_WORKED_EXAMPLE_SOURCE = (4, 1, 8, 3, 5, 7, 10, 2, 6, 9)
_WORKED_EXAMPLE_IMAGES = {
    1: (7, 11, 1, 8, 3, 4, 6, 10, 2, 5, 9),
    2: (3, 10, 7, 11, 2, 4, 6, 9, 1, 5, 8),
    4: (1, 4, 6, 8, 3, 10, 7, 11, 2, 5, 9),
}


def _bijection_partition_witness(target: int) -> Optional[Witness]:
    """Check the three case maps partition the no-odd-descent classes of S_target."""
    buckets: dict[int, dict[tuple[int, ...], int]] = {}

    def put(image: tuple[int, ...], k: int) -> None:
        buckets.setdefault(k, {})
        buckets[k][image] = buckets[k].get(image, 0) + 1

    if target % 2 == 0:
        n = target // 2
        for pi, edes in permutations_no_odd_descents(target - 1):
            put(append_max(pi), edes)
            for j in range(1, n):
                image = rotate_insert(pi, j)
                k = edes if pi[2 * j - 1] > pi[2 * j] else edes + 1
                put(image, k)
                if rotate_insert_inverse(image) != (pi, j):
                    return Witness(
                        {"target": target, "j": j, "source": " ".join(map(str, pi))},
                        "round-trip source",
                        " ".join(map(str, rotate_insert_inverse(image)[0])),
                    )
    else:
        n = (target - 1) // 2
        for pi, edes in permutations_no_odd_descents(target - 1):
            put(append_max(pi), edes)
        for theta, odes in permutations_no_even_descents(target - 1):
            for j in range(1, n + 1):
                image = reflect_insert(theta, j)
                k = odes if theta[2 * j - 2] > theta[2 * j - 1] else odes + 1
                put(image, k)
                if reflect_insert_inverse(image) != (theta, j):
                    return Witness(
                        {"target": target, "j": j, "source": " ".join(map(str, theta))},
                        "round-trip source",
                        " ".join(map(str, reflect_insert_inverse(image)[0])),
                    )
    actual: dict[int, set[tuple[int, ...]]] = {}
    for word, edes in permutations_no_odd_descents(target):
        actual.setdefault(edes, set()).add(word)
    expected_ks = set(actual) | set(buckets)
    for k in sorted(expected_ks):
        images = buckets.get(k, {})
        members = actual.get(k, set())
        multiple = [w for w, count in images.items() if count != 1]
        if multiple:
            return Witness(
                {"target": target, "k": k, "image": " ".join(map(str, multiple[0]))},
                "multiplicity 1",
                str(images[multiple[0]]),
            )
        if set(images) != members:
            diff = set(images) ^ members
            word = sorted(diff)[0]
            return Witness(
                {"target": target, "k": k, "word": " ".join(map(str, word))},
                f"{len(members)} class members",
                f"{len(images)} images",
            )
    return None


def check_insertion_bijections(
    n_max: int, oracle_cap: int = DEFAULT_ORACLE_CAP
) -> IdentityReport:
    """The insertion maps biject onto the no-odd-descent classes.

    For every target size up to min(n_max, oracle_cap): the appended, rotated
    and reflected images together hit each class exactly once, and both
    insertion maps invert.  Includes the fixed 10-element example with its
    three images as a golden case.
    """
    max_target = min(n_max, oracle_cap)
    params = {"n_max": n_max, "oracle_cap": oracle_cap, "max_target": max_target}

    def find() -> Optional[Witness]:
        source = _WORKED_EXAMPLE_SOURCE
        stats = descent_stats(source)
        if stats.descent_set != (1, 3, 7) or stats.edes != 0:
            return Witness(
                {"example": " ".join(map(str, source))},
                "descents at 1, 3, 7 (all odd)",
                str(stats),
            )
        for j, expected in _WORKED_EXAMPLE_IMAGES.items():
            image = reflect_insert(source, j)
            if image != expected:
                return Witness(
                    {"example": " ".join(map(str, source)), "j": j},
                    " ".join(map(str, expected)),
                    " ".join(map(str, image)),
                )
            image_stats = descent_stats(image)
            if image_stats.odes != 0 or image_stats.edes != 3:
                return Witness(
                    {"example-image": " ".join(map(str, image)), "j": j},
                    "3 even descents, no odd descents",
                    str(image_stats),
                )
        for target in range(3, max_target + 1):
            witness = _bijection_partition_witness(target)
            if witness is not None:
                return witness
        return None

    return _report("insertion-bijections", params, find)


_REGISTRY: tuple[tuple[str, Callable[[int, int], IdentityReport]], ...] = (
    ("convolution-recurrence", lambda n, cap: check_convolution_recurrence(n, cap)),
    ("substitution-closed-form", lambda n, cap: check_substitution_closed_form(n)),
    ("row-symmetry", lambda n, cap: check_row_symmetry(n)),
    ("palindromicity", lambda n, cap: check_palindromicity(n)),
    ("special-rows", lambda n, cap: check_special_rows(n)),
    ("catalan-series-q0", lambda n, cap: check_catalan_series_q0(n)),
    ("egf-rational-points", lambda n, cap: check_egf_rational_points(n)),
    ("egf-differential-equations", lambda n, cap: check_egf_differential_equations(n)),
    ("eulerian-conversions", lambda n, cap: check_eulerian_conversions(n)),
    ("euler-evaluation", lambda n, cap: check_euler_evaluation(n)),
    ("tangent-rows", lambda n, cap: check_tangent_rows(n)),
    ("euler-eulerian", lambda n, cap: check_euler_eulerian(n)),
    ("triangle-recurrences", lambda n, cap: check_triangle_recurrences(n, cap)),
    ("insertion-bijections", lambda n, cap: check_insertion_bijections(n, cap)),
)


def identity_ids() -> tuple[str, ...]:
    return tuple(identity for identity, _ in _REGISTRY)


def run_suite(
    selection: str | Iterable[str] = "all",
    n_max: int = DEFAULT_N_MAX,
    oracle_cap: int = DEFAULT_ORACLE_CAP,
) -> list[IdentityReport]:
    """Run the selected checks in registry order and collect their reports.

    ``selection`` is "all" or any subset of :func:`identity_ids`; an unknown
    id raises :class:`UnknownIdentityError` naming it.
    """
    known = identity_ids()
    if isinstance(selection, str) and selection == "all":
        wanted = set(known)
    else:
        if isinstance(selection, str):
            selection = [selection]
        wanted = set(selection)
        for identity in wanted:
            if identity not in known:
                raise UnknownIdentityError(
                    f"unknown identity id {identity!r}; known ids: {', '.join(known)}"
                )
    return [
        runner(n_max, oracle_cap)
        for identity, runner in _REGISTRY
        if identity in wanted
    ]
