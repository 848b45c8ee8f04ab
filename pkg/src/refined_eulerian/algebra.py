"""Exact polynomial and truncated-power-series arithmetic.

Everything is computed over Python ints and ``fractions.Fraction``; no
floating point is used anywhere.  Three value types cover the needs of the
descent-polynomial machinery:

- :class:`BivariatePolynomial`: sparse integer (or rational) polynomials in
  the variable pair ``p, q``;
- :class:`UnivariatePolynomial`: dense polynomials in a single variable;
- :class:`TruncatedSeries`: formal power series over exact rationals,
  truncated at an explicit order.

Truncation orders are strict: combining two series of different orders is
an error rather than a silent loss of precision.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Number = Union[int, Fraction]

__all__ = [
    "BivariatePolynomial",
    "UnivariatePolynomial",
    "TruncatedSeries",
    "RationalSubstitution",
    "catalan_numbers",
    "catalan_series",
    "egf_eulerian",
    "evaluate_at_series",
    "is_palindromic",
    "rational_sqrt",
]


def _format_term(parts: list[str], coeff: Number, monomial: str) -> None:
    """Append one signed term to a canonical rendering under construction."""
    magnitude = abs(coeff)
    if monomial and magnitude == 1:
        body = monomial
    elif monomial:
        body = f"{magnitude}*{monomial}"
    else:
        body = f"{magnitude}"
    if not parts:
        parts.append(body if coeff > 0 else f"-{body}")
    else:
        parts.append(f"+ {body}" if coeff > 0 else f"- {body}")


def _power_text(var: str, exponent: int) -> str:
    if exponent == 0:
        return ""
    if exponent == 1:
        return var
    return f"{var}^{exponent}"


class BivariatePolynomial:
    """Sparse exact polynomial in the variable pair ``p, q``.

    Monomials are keyed by the exponent pair ``(i, j)`` for ``p^i * q^j``;
    zero coefficients are never stored.  Instances are treated as immutable.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[tuple[int, int], Number] | None = None):
        clean: dict[tuple[int, int], Number] = {}
        if coeffs:
            for (i, j), c in coeffs.items():
                if i < 0 or j < 0:
                    raise ValueError("monomial exponents must be non-negative")
                if c:
                    clean[(int(i), int(j))] = c
        self._coeffs = clean

    @classmethod
    def zero(cls) -> BivariatePolynomial:
        return cls()

    @classmethod
    def one(cls) -> BivariatePolynomial:
        return cls({(0, 0): 1})

    @classmethod
    def constant(cls, c: Number) -> BivariatePolynomial:
        return cls({(0, 0): c})

    @classmethod
    def variable_p(cls) -> BivariatePolynomial:
        return cls({(1, 0): 1})

    @classmethod
    def variable_q(cls) -> BivariatePolynomial:
        return cls({(0, 1): 1})

    def terms(self) -> dict[tuple[int, int], Number]:
        return dict(self._coeffs)

    def coefficient(self, i: int, j: int) -> Number:
        return self._coeffs.get((i, j), 0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def total_degree(self) -> int:
        """Largest i+j over the support; -1 for the zero polynomial."""
        if not self._coeffs:
            return -1
        return max(i + j for i, j in self._coeffs)

    def coefficient_sum(self) -> Number:
        return sum(self._coeffs.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    __hash__ = None  # mutable-dict backed; identity hashing would be a trap

    def __add__(self, other: BivariatePolynomial) -> BivariatePolynomial:
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        acc = dict(self._coeffs)
        for key, c in other._coeffs.items():
            acc[key] = acc.get(key, 0) + c
        return BivariatePolynomial(acc)

    def __neg__(self) -> BivariatePolynomial:
        return BivariatePolynomial({k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other: BivariatePolynomial) -> BivariatePolynomial:
        return self + (-other)

    def __mul__(self, other: BivariatePolynomial | Number) -> BivariatePolynomial:
        if isinstance(other, (int, Fraction)):
            return BivariatePolynomial({k: c * other for k, c in self._coeffs.items()})
        if not isinstance(other, BivariatePolynomial):
            return NotImplemented
        acc: dict[tuple[int, int], Number] = {}
        for (i1, j1), c1 in self._coeffs.items():
            for (i2, j2), c2 in other._coeffs.items():
                key = (i1 + i2, j1 + j2)
                acc[key] = acc.get(key, 0) + c1 * c2
        return BivariatePolynomial(acc)

    def __rmul__(self, other: Number) -> BivariatePolynomial:
        return self.__mul__(other)

    def __pow__(self, exponent: int) -> BivariatePolynomial:
        if exponent < 0:
            raise ValueError("negative powers of a polynomial are not defined")
        result = BivariatePolynomial.one()
        for _ in range(exponent):
            result = result * self
        return result

    def swap_variables(self) -> BivariatePolynomial:
        """Exchange the roles of p and q."""
        return BivariatePolynomial({(j, i): c for (i, j), c in self._coeffs.items()})

    def evaluate(self, p_value: Number, q_value: Number) -> Number:
        p_value = Fraction(p_value)
        q_value = Fraction(q_value)
        total = Fraction(0)
        for (i, j), c in self._coeffs.items():
            total += c * p_value**i * q_value**j
        return total

    def substitute_q(self, value: Number) -> UnivariatePolynomial:
        """Collapse q at an exact value, leaving a polynomial in p."""
        acc: dict[int, Number] = {}
        for (i, j), c in self._coeffs.items():
            acc[i] = acc.get(i, 0) + c * Fraction(value) ** j
        size = max(acc, default=-1) + 1
        return UnivariatePolynomial([acc.get(i, 0) for i in range(size)])

    def substitute_p(self, value: Number) -> UnivariatePolynomial:
        """Collapse p at an exact value, leaving a polynomial in q."""
        return self.swap_variables().substitute_q(value)

    def substitute_diagonal(self) -> UnivariatePolynomial:
        """Set p = q, collecting monomials by total degree."""
        acc: dict[int, Number] = {}
        for (i, j), c in self._coeffs.items():
            acc[i + j] = acc.get(i + j, 0) + c
        size = max(acc, default=-1) + 1
        return UnivariatePolynomial([acc.get(k, 0) for k in range(size)])

    def sorted_terms(self) -> list[tuple[tuple[int, int], Number]]:
        """Terms in canonical order: total degree ascending, p-degree descending."""
        return sorted(self._coeffs.items(), key=lambda kv: (kv[0][0] + kv[0][1], -kv[0][0]))

    def to_text(self) -> str:
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for (i, j), c in self.sorted_terms():
            monomial = "*".join(s for s in (_power_text("p", i), _power_text("q", j)) if s)
            _format_term(parts, c, monomial)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"BivariatePolynomial({self.to_text()!r})"


class UnivariatePolynomial:
    """Dense exact polynomial in one variable, trailing zeros trimmed."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> UnivariatePolynomial:
        return cls()

    @classmethod
    def one(cls) -> UnivariatePolynomial:
        return cls((1,))

    @classmethod
    def constant(cls, c: Number) -> UnivariatePolynomial:
        return cls((c,))

    @classmethod
    def variable(cls) -> UnivariatePolynomial:
        return cls((0, 1))

    @property
    def coefficients(self) -> tuple[Number, ...]:
        return self._coeffs

    def coefficient(self, k: int) -> Number:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return 0

    def degree(self) -> int:
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UnivariatePolynomial):
            return NotImplemented
        return len(self._coeffs) == len(other._coeffs) and all(
            a == b for a, b in zip(self._coeffs, other._coeffs)
        )

    __hash__ = None

    def __add__(self, other: UnivariatePolynomial) -> UnivariatePolynomial:
        if not isinstance(other, UnivariatePolynomial):
            return NotImplemented
        size = max(len(self._coeffs), len(other._coeffs))
        return UnivariatePolynomial(
            [self.coefficient(k) + other.coefficient(k) for k in range(size)]
        )

    def __neg__(self) -> UnivariatePolynomial:
        return UnivariatePolynomial([-c for c in self._coeffs])

    def __sub__(self, other: UnivariatePolynomial) -> UnivariatePolynomial:
        return self + (-other)

    def __mul__(self, other: UnivariatePolynomial | Number) -> UnivariatePolynomial:
        if isinstance(other, (int, Fraction)):
            return UnivariatePolynomial([c * other for c in self._coeffs])
        if not isinstance(other, UnivariatePolynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return UnivariatePolynomial.zero()
        out = [0] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return UnivariatePolynomial(out)

    def __rmul__(self, other: Number) -> UnivariatePolynomial:
        return self.__mul__(other)

    def __pow__(self, exponent: int) -> UnivariatePolynomial:
        if exponent < 0:
            raise ValueError("negative powers of a polynomial are not defined")
        result = UnivariatePolynomial.one()
        for _ in range(exponent):
            result = result * self
        return result

    def evaluate(self, x: Number) -> Number:
        x = Fraction(x)
        total = Fraction(0)
        for c in reversed(self._coeffs):
            total = total * x + c
        return total

    def derivative(self) -> UnivariatePolynomial:
        return UnivariatePolynomial([k * c for k, c in enumerate(self._coeffs)][1:])

    def to_text(self, var: str = "q") -> str:
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for k, c in enumerate(self._coeffs):
            if not c:
                continue
            _format_term(parts, c, _power_text(var, k))
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"UnivariatePolynomial({self.to_text()!r})"


class TruncatedSeries:
    """Formal power series over Fraction, truncated at an explicit order.

    A series of order N stores coefficients c_0..c_N and stands for
    ``sum c_k t^k + O(t^(N+1))``.  Binary operations demand equal orders.
    """

    __slots__ = ("_order", "_coeffs")

    def __init__(self, order: int, coeffs: Iterable[Number] = ()):
        if order < 0:
            raise ValueError("truncation order must be non-negative")
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > order + 1:
            raise ValueError("more coefficients than the truncation order allows")
        cs.extend(Fraction(0) for _ in range(order + 1 - len(cs)))
        self._order = order
        self._coeffs = tuple(cs)

    @classmethod
    def constant(cls, c: Number, order: int) -> TruncatedSeries:
        return cls(order, (Fraction(c),))

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls.constant(1, order)

    @property
    def order(self) -> int:
        return self._order

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def coefficient(self, k: int) -> Fraction:
        if not 0 <= k <= self._order:
            raise IndexError(f"coefficient index {k} outside truncation order {self._order}")
        return self._coeffs[k]

    def _require_same_order(self, other: TruncatedSeries) -> None:
        if self._order != other._order:
            raise ValueError(
                f"truncation orders differ ({self._order} vs {other._order}); "
                "truncate explicitly before mixing"
            )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._order == other._order and self._coeffs == other._coeffs

    __hash__ = None

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._require_same_order(other)
        return TruncatedSeries(self._order, [a + b for a, b in zip(self._coeffs, other._coeffs)])

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(self._order, [-c for c in self._coeffs])

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._require_same_order(other)
        n = self._order
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self._coeffs):
            if not a:
                continue
            for j in range(n + 1 - i):
                b = other._coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(n, out)

    def scale(self, c: Number) -> TruncatedSeries:
        c = Fraction(c)
        return TruncatedSeries(self._order, [c * a for a in self._coeffs])

    def add_scalar(self, c: Number) -> TruncatedSeries:
        out = list(self._coeffs)
        out[0] += Fraction(c)
        return TruncatedSeries(self._order, out)

    def reciprocal(self) -> TruncatedSeries:
        """Multiplicative inverse; requires a nonzero constant term."""
        c0 = self._coeffs[0]
        if not c0:
            raise ValueError("series with zero constant term has no reciprocal")
        inv0 = Fraction(1) / c0
        out = [inv0]
        for k in range(1, self._order + 1):
            acc = Fraction(0)
            for i in range(1, k + 1):
                acc += self._coeffs[i] * out[k - i]
            out.append(-inv0 * acc)
        return TruncatedSeries(self._order, out)

    def pow(self, exponent: int) -> TruncatedSeries:
        """Integer power; negative exponents go through the reciprocal."""
        if exponent < 0:
            return self.reciprocal().pow(-exponent)
        result = TruncatedSeries.one(self._order)
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def derivative(self) -> TruncatedSeries:
        """Formal d/dt; the truncation order drops by one."""
        if self._order == 0:
            raise ValueError("cannot differentiate a series truncated at order 0")
        return TruncatedSeries(
            self._order - 1, [k * self._coeffs[k] for k in range(1, self._order + 1)]
        )

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self._order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(order, self._coeffs[: order + 1])

    def mul_monomial(self, c: Number, exponent: int) -> TruncatedSeries:
        """Multiply by c*t^exponent at the same truncation order."""
        if exponent < 0:
            raise ValueError("monomial exponent must be non-negative")
        c = Fraction(c)
        out = [Fraction(0)] * (self._order + 1)
        for k in range(self._order + 1 - exponent):
            out[k + exponent] = c * self._coeffs[k]
        return TruncatedSeries(self._order, out)

    def substitute_monomial(self, c: Number, exponent: int, order: int) -> TruncatedSeries:
        """Substitute t -> c*t^exponent, producing a series of the given order."""
        if exponent < 1:
            raise ValueError("substitution exponent must be at least 1")
        if self._order < order // exponent:
            raise ValueError("source series is too short for the requested order")
        c = Fraction(c)
        out = [Fraction(0)] * (order + 1)
        for k in range(0, order + 1, exponent):
            i = k // exponent
            out[k] = self._coeffs[i] * c**i
        return TruncatedSeries(order, out)

    def to_text(self) -> str:
        parts: list[str] = []
        for k, c in enumerate(self._coeffs):
            if not c:
                continue
            _format_term(parts, c, _power_text("t", k))
        body = " ".join(parts) if parts else "0"
        return f"{body} + O(t^{self._order + 1})"

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.to_text()!r})"


@dataclass(frozen=True, eq=False)
class RationalSubstitution:
    """A substitution q -> numerator/denominator with a declared degree bound.

    ``apply`` clears denominators: for f of degree at most ``degree`` it
    returns ``denominator^degree * f(numerator/denominator)`` as an exact
    polynomial.  The bound is caller-supplied on purpose; exceeding it is an
    error, never a guess.
    """

    numerator: BivariatePolynomial
    denominator: BivariatePolynomial
    degree: int

    def __post_init__(self):
        if self.denominator.is_zero():
            raise ValueError("substitution denominator must not be the zero polynomial")
        if self.degree < 0:
            raise ValueError("degree bound must be non-negative")

    def apply(self, f: UnivariatePolynomial) -> BivariatePolynomial:
        if f.degree() > self.degree:
            raise ValueError(
                f"polynomial degree {f.degree()} exceeds the declared bound {self.degree}"
            )
        num_power = BivariatePolynomial.one()
        num_powers = [num_power]
        for _ in range(self.degree):
            num_power = num_power * self.numerator
            num_powers.append(num_power)
        den_power = BivariatePolynomial.one()
        den_powers = [den_power]
        for _ in range(self.degree):
            den_power = den_power * self.denominator
            den_powers.append(den_power)
        total = BivariatePolynomial.zero()
        for k in range(self.degree + 1):
            c = f.coefficient(k)
            if c:
                total = total + num_powers[k] * den_powers[self.degree - k] * c
        return total


def is_palindromic(f: BivariatePolynomial, darga: int) -> bool:
    """True iff f(p, q) = (pq)^darga * f(1/p, 1/q) coefficientwise.

    Any support outside the [0, darga]^2 box makes the reflection impossible,
    so it returns False.
    """
    for (i, j), c in f.terms().items():
        if i > darga or j > darga:
            return False
        if f.coefficient(darga - i, darga - j) != c:
            return False
    return True


def catalan_numbers(n_max: int) -> list[int]:
    """C_0..C_n_max via the multiplicative recurrence; exact integers."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    values = [1]
    for n in range(n_max):
        values.append(values[-1] * 2 * (2 * n + 1) // (n + 2))
    return values


def catalan_series(order: int) -> TruncatedSeries:
    """The Catalan generating function 1 + t + 2t^2 + 5t^3 + ... truncated."""
    return TruncatedSeries(order, catalan_numbers(order))


def egf_eulerian(x: Number, scale: Number, order: int) -> TruncatedSeries:
    """Ordinary coefficients of the descent-polynomial EGF at q = x, t -> scale*t.

    The closed form (1 - x) / (exp(scale*(x-1)*t) - x) is expanded directly,
    so the result is independent of any polynomial recurrence.  The t^n
    coefficient equals A_n(x) * scale^n / n! with constant term 1.
    """
    x = Fraction(x)
    scale = Fraction(scale)
    if x == 1:
        raise ValueError("x = 1 is a removable singularity of the closed form; not supported")
    r = scale * (x - 1)
    exponential = TruncatedSeries(
        order, [r**k / math.factorial(k) for k in range(order + 1)]
    )
    return exponential.add_scalar(-x).reciprocal().scale(1 - x)


def evaluate_at_series(f: UnivariatePolynomial, s: TruncatedSeries) -> TruncatedSeries:
    """Horner evaluation of a polynomial at a truncated series argument."""
    acc = TruncatedSeries.constant(0, s.order)
    for c in reversed(f.coefficients):
        acc = (acc * s).add_scalar(c)
    return acc


def rational_sqrt(r: Fraction) -> Fraction:
    """Exact square root of a positive rational; error if irrational."""
    r = Fraction(r)
    if r <= 0:
        raise ValueError("square root of a non-positive rational is not supported")
    num = math.isqrt(r.numerator)
    den = math.isqrt(r.denominator)
    if num * num != r.numerator or den * den != r.denominator:
        raise ValueError(f"{r} is not the square of a rational")
    return Fraction(num, den)
