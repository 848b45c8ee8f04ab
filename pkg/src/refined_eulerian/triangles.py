"""Fast recurrence-based generators for every table in the family.

Covers the classical descent triangle and its polynomials, the zigzag
(secant/tangent) numbers via the boustrophedon transform, Catalan numbers,
the parity-refined descent polynomials A_n(p, q), the even-descent triangle
a_{n,k} (k even descents, no odd descents), and the gamma coefficients
c_{n,j} (coefficients of A_n(p, 0)).

All values are exact integers end to end; conversion sums that pass through
rational intermediates are checked integral before being returned.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import (
    BivariatePolynomial,
    UnivariatePolynomial,
    catalan_numbers,
    catalan_series,
)

__all__ = [
    "TriangleTable",
    "SequenceTable",
    "eulerian_triangle",
    "eulerian_row",
    "eulerian_polynomial",
    "entringer_triangle",
    "euler_numbers",
    "euler_number",
    "catalan_sequence",
    "refined_polys",
    "refined_poly",
    "next_refined_from",
    "tilde_poly",
    "a_triangle",
    "a_row",
    "even_descent_polynomial",
    "c_coeffs",
    "c_triangle",
    "odd_descent_polynomial",
    "catalan_power_coefficient",
    "a_from_eulerian",
    "eulerian_from_a",
    "euler_from_eulerian",
]


@dataclass(frozen=True)
class TriangleTable:
    """Rectangular store of exact integer rows indexed by n."""

    kind: str  # "eulerian" | "refined_a" | "gamma_c" | "entringer"
    first_n: int
    rows: tuple[tuple[int, ...], ...]

    def row(self, n: int) -> tuple[int, ...]:
        index = n - self.first_n
        if not 0 <= index < len(self.rows):
            raise IndexError(f"row {n} not stored (have {self.first_n}..{self.last_n})")
        return self.rows[index]

    @property
    def last_n(self) -> int:
        return self.first_n + len(self.rows) - 1

    def rows_by_n(self):
        for offset, row in enumerate(self.rows):
            yield self.first_n + offset, row


@dataclass(frozen=True)
class SequenceTable:
    """A plain list of exact integers indexed from 0."""

    kind: str  # "euler" | "catalan"
    values: tuple[int, ...]

    def value(self, n: int) -> int:
        return self.values[n]


def eulerian_triangle(n_max: int) -> TriangleTable:
    """Rows 0..n_max of the descent-count triangle.

    Row n >= 1 has entries k = 0..n-1 and sums to n!; row 0 is (1,).
    """
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    rows: list[tuple[int, ...]] = [(1,)]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        row = []
        for k in range(n):
            left = prev[k - 1] if 0 <= k - 1 < len(prev) else 0
            right = prev[k] if k < len(prev) else 0
            row.append((n - k) * left + (k + 1) * right)
        rows.append(tuple(row))
    return TriangleTable(kind="eulerian", first_n=0, rows=tuple(rows))


def eulerian_row(n: int) -> tuple[int, ...]:
    return eulerian_triangle(n).row(n)


def eulerian_polynomial(n: int) -> UnivariatePolynomial:
    """The classical descent polynomial of S_n (1 for n = 0)."""
    return UnivariatePolynomial(eulerian_row(n))


def entringer_triangle(n_max: int) -> TriangleTable:
    """Boustrophedon scratch rows; row n ends in the n-th zigzag number."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    rows: list[tuple[int, ...]] = [(1,)]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        row = [0]
        for k in range(n):
            row.append(row[-1] + prev[n - 1 - k])
        rows.append(tuple(row))
    return TriangleTable(kind="entringer", first_n=0, rows=tuple(rows))


def euler_numbers(n_max: int) -> SequenceTable:
    """Zigzag numbers E_0..E_n_max: 1, 1, 1, 2, 5, 16, 61, 272, ...

    Integer-only boustrophedon transform; the EGF route through exact
    rationals exists separately as an independent cross-check.
    """
    triangle = entringer_triangle(n_max)
    return SequenceTable(kind="euler", values=tuple(row[-1] for row in triangle.rows))


def euler_number(n: int) -> int:
    return euler_numbers(n).values[n]


def catalan_sequence(n_max: int) -> SequenceTable:
    return SequenceTable(kind="catalan", values=tuple(catalan_numbers(n_max)))


_ONE = BivariatePolynomial.one()
_P = BivariatePolynomial.variable_p()
_Q = BivariatePolynomial.variable_q()
_ONE_PLUS_P = _ONE + _P
_ONE_PLUS_Q = _ONE + _Q
_P_PLUS_Q = _P + _Q

_refined_cache: list[BivariatePolynomial] = [_ONE, _ONE]
_refined_lock = threading.Lock()


def next_refined_from(rows: Sequence[BivariatePolynomial]) -> BivariatePolynomial:
    """One convolution step: the next polynomial from the given lower ones.

    ``rows`` must hold A_0..A_{m-1}; the return value is A_m.  Even m uses
    the single convolution against the odd-index polynomials; odd m uses the
    two-sum form whose first sum swaps the variables of its second factor.
    Exposed so that verification code can drive the same step with
    independently computed inputs.
    """
    m = len(rows)
    if m < 2:
        raise ValueError("need at least A_0 and A_1 to extend")
    if m % 2 == 0:
        n = m // 2
        acc = _ONE_PLUS_P * rows[m - 1]
        conv = BivariatePolynomial.zero()
        for i in range(1, n):
            conv = conv + rows[2 * i - 1] * rows[m - 2 * i] * math.comb(m - 1, 2 * i - 1)
        return acc + _P_PLUS_Q * conv
    n = (m - 1) // 2
    conv_p = BivariatePolynomial.zero()
    for i in range(n):
        conv_p = conv_p + rows[2 * i] * rows[2 * n - 2 * i].swap_variables() * math.comb(
            2 * n, 2 * i
        )
    conv_q = BivariatePolynomial.zero()
    for i in range(1, n + 1):
        conv_q = conv_q + rows[2 * i - 1] * rows[2 * n - 2 * i + 1] * math.comb(
            2 * n, 2 * i - 1
        )
    return rows[m - 1] + _P * conv_p + _Q * conv_q


def refined_polys(n_max: int) -> list[BivariatePolynomial]:
    """A_0..A_n_max by the convolution recurrences; rows are memoized."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    with _refined_lock:
        while len(_refined_cache) <= n_max:
            _refined_cache.append(next_refined_from(_refined_cache))
        return list(_refined_cache[: n_max + 1])


def refined_poly(n: int) -> BivariatePolynomial:
    """The parity-refined descent polynomial A_n(p, q); A_0 = 1."""
    return refined_polys(n)[n]


def tilde_poly(n: int) -> BivariatePolynomial:
    """The palindromic normalization: A_n for odd n, (1+q) A_n for even n >= 2."""
    if n == 0:
        return _ONE
    poly = refined_poly(n)
    return poly if n % 2 else _ONE_PLUS_Q * poly


def a_triangle(n_max: int) -> TriangleTable:
    """Rows 1..n_max of a_{n,k}: k even descents and no odd descents.

    Rows alternate between the two-term step (odd to even row) and the
    three-term step (even to odd row); every row starts with 1 and ends in
    the matching zigzag number.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    rows: list[tuple[int, ...]] = [(1,)]

    def get(row: tuple[int, ...], k: int) -> int:
        return row[k] if 0 <= k < len(row) else 0

    for n in range(2, n_max + 1):
        prev = rows[-1]
        width = (n - 1) // 2 + 1
        if n % 2 == 0:
            half = n // 2
            row = tuple(
                (half - k) * get(prev, k - 1) + (k + 1) * get(prev, k)
                for k in range(width)
            )
        else:
            half = (n - 1) // 2
            row = tuple(
                (half - k + 1) * get(prev, k - 2)
                + (half + 1) * get(prev, k - 1)
                + (k + 1) * get(prev, k)
                for k in range(width)
            )
        rows.append(row)
    return TriangleTable(kind="refined_a", first_n=1, rows=tuple(rows))


def a_row(n: int) -> tuple[int, ...]:
    return a_triangle(n).row(n)


def even_descent_polynomial(n: int) -> UnivariatePolynomial:
    """A_n(0, q) as a polynomial in q; constant 1 for n = 0."""
    if n == 0:
        return UnivariatePolynomial.one()
    return UnivariatePolynomial(a_row(n))


def c_coeffs(n: int) -> tuple[int, ...]:
    """Coefficients of A_n(p, 0): j odd descents and no even descents.

    Equal to the a-row for odd n; pairwise sums a_{n,j} + a_{n,j-1} for even n.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    row = a_row(n)
    if n % 2:
        return row

    def get(k: int) -> int:
        return row[k] if 0 <= k < len(row) else 0

    return tuple(get(j) + get(j - 1) for j in range(n // 2 + 1))


def c_triangle(n_max: int) -> TriangleTable:
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    return TriangleTable(
        kind="gamma_c",
        first_n=1,
        rows=tuple(c_coeffs(n) for n in range(1, n_max + 1)),
    )


def odd_descent_polynomial(n: int) -> UnivariatePolynomial:
    """A_n(p, 0) as a polynomial in p; constant 1 for n = 0."""
    if n == 0:
        return UnivariatePolynomial.one()
    return UnivariatePolynomial(c_coeffs(n))


def catalan_power_coefficient(alpha: int, i: int) -> Fraction:
    """Coefficient of t^i in C(t)^alpha, via series arithmetic.

    Deliberately bypasses the closed-form ratio, which hits 0/0 at some
    index combinations; the series value is always defined and agrees with
    the closed form wherever the latter is.
    """
    if i < 0:
        raise ValueError("coefficient index must be non-negative")
    return catalan_series(i).pow(alpha).coefficient(i)


def _as_integer(value: Fraction, context: str) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"{context}: expected an integer, got {value}")
    return value.numerator


def a_from_eulerian(n: int, k: int) -> int:
    """a_{n,k} rebuilt from the descent-count row via Catalan-power sums."""
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    row = eulerian_row(n)

    def entry(j: int) -> int:
        return row[j] if 0 <= j < len(row) else 0

    if n % 2:
        half = (n - 1) // 2
        if k > half:
            raise ValueError(f"k={k} outside 0..{half} for row {n}")
        total = sum(
            entry(k - 2 * i) * catalan_power_coefficient(k - 2 * i - half, i)
            for i in range(k // 2 + 1)
        )
    else:
        half = (n - 2) // 2
        if k > half:
            raise ValueError(f"k={k} outside 0..{half} for row {n}")
        total = Fraction(0)
        for i in range(k // 2 + 1):
            for j in range(k - 2 * i + 1):
                r = k - 2 * i - j
                total += (
                    (-1) ** r
                    * entry(j)
                    * catalan_power_coefficient(r + j - half, i)
                )
    return _as_integer(Fraction(total) / 2**k, f"a_from_eulerian({n}, {k})")


def eulerian_from_a(n: int, k: int) -> int:
    """A_{n,k} rebuilt from the even-descent row; valid for k up to floor((n-1)/2)."""
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    row = a_row(n)

    def entry(j: int) -> int:
        return row[j] if 0 <= j < len(row) else 0

    half = (n - 1) // 2 if n % 2 else (n - 2) // 2
    if k > half:
        raise ValueError(f"k={k} outside the valid range 0..{half} for row {n}")
    if n % 2:
        return sum(
            math.comb(half - k + 2 * i, i) * 2 ** (k - 2 * i) * entry(k - 2 * i)
            for i in range(k // 2 + 1)
        )
    total = 0
    for target in (k, k - 1):
        if target < 0:
            continue
        for i in range(target // 2 + 1):
            j = target - 2 * i
            total += math.comb(half - j, i) * 2**j * entry(j)
    return total


def euler_from_eulerian(n: int) -> int:
    """The n-th zigzag number from the descent-count row alone."""
    if n < 1:
        raise ValueError("n must be at least 1")
    row = eulerian_row(n)

    def entry(j: int) -> int:
        return row[j] if 0 <= j < len(row) else 0

    if n % 2:
        m = (n - 1) // 2
        total = -entry(m) + 2 * sum(
            (-1) ** i * entry(m - 2 * i) for i in range(m // 2 + 1)
        )
    else:
        m = (n - 2) // 2
        first = sum((-1) ** (m - j) * entry(j) for j in range(m + 1))
        second = sum(
            (-1) ** (m - i - j) * entry(j)
            for i in range(m // 2 + 1)
            for j in range(m - 2 * i + 1)
        )
        total = -first + 2 * second
    return _as_integer(Fraction(total, 2**m), f"euler_from_eulerian({n})")
