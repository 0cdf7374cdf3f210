"""Exact integer coefficient algebra for Dirichlet series.

A series is a finite table of coefficients a_1..a_N.  A closed form is a
sum of terms, each a polynomial in 2^(-s) times a product of shifted zeta
factors, where shift k stands for the factor whose n-th coefficient is n^k.
Everything here is exact integer arithmetic; no floats ever enter.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd, isqrt

DEFAULT_LIMIT = 5000


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    small = []
    large = []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    large.reverse()
    return small + large


def divisor_count(n: int) -> int:
    """d(n), the number of positive divisors of n."""
    return len(divisors(n))


def divisor_sum(n: int) -> int:
    """sigma(n), the sum of the positive divisors of n."""
    return sum(divisors(n))


@dataclass(frozen=True, slots=True)
class CoefficientSeries:
    """Integer coefficients a_1..a_limit; indexing is 1-based, index 0 is
    never stored."""

    limit: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.limit < 1:
            raise ValueError(f"series limit must be >= 1, got {self.limit}")
        if len(self.coeffs) != self.limit:
            raise ValueError(
                f"expected {self.limit} coefficients, got {len(self.coeffs)}"
            )

    def __getitem__(self, n: int) -> int:
        if not 1 <= n <= self.limit:
            raise IndexError(f"coefficient index {n} outside 1..{self.limit}")
        return self.coeffs[n - 1]


def zero_series(limit: int) -> CoefficientSeries:
    return CoefficientSeries(limit, (0,) * limit)


def identity_series(limit: int) -> CoefficientSeries:
    """The Dirichlet unit: 1 at n = 1, 0 elsewhere."""
    return CoefficientSeries(limit, (1,) + (0,) * (limit - 1))


def zeta_shift_coeffs(k: int, limit: int) -> CoefficientSeries:
    """Coefficients of the zeta factor shifted by k: a_n = n^k."""
    if k < 0:
        raise ValueError(f"shift must be non-negative, got {k}")
    return CoefficientSeries(limit, tuple(n**k for n in range(1, limit + 1)))


def add(a: CoefficientSeries, b: CoefficientSeries) -> CoefficientSeries:
    """Pointwise sum of two series with equal limits."""
    _check_limits(a, b)
    return CoefficientSeries(a.limit, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def convolve(a: CoefficientSeries, b: CoefficientSeries) -> CoefficientSeries:
    """Dirichlet product: result_n = sum over d | n of a_d * b_{n/d}."""
    _check_limits(a, b)
    limit = a.limit
    out = [0] * limit
    ac = a.coeffs
    bc = b.coeffs
    for d in range(1, limit + 1):
        ad = ac[d - 1]
        if ad == 0:
            continue
        for e in range(1, limit // d + 1):
            out[d * e - 1] += ad * bc[e - 1]
    return CoefficientSeries(limit, tuple(out))


def scale_shift(a: CoefficientSeries, m: int, c: int) -> CoefficientSeries:
    """The series c * m^(-s) * A: coefficient c * a_{n/m} where m | n, else 0."""
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    out = [0] * a.limit
    for j in range(1, a.limit // m + 1):
        out[j * m - 1] = c * a.coeffs[j - 1]
    return CoefficientSeries(a.limit, tuple(out))


def _check_limits(a: CoefficientSeries, b: CoefficientSeries) -> None:
    if a.limit != b.limit:
        raise ValueError(f"series limits differ: {a.limit} != {b.limit}")


@dataclass(frozen=True)
class Term:
    """One summand of a closed form: a polynomial q_0 + q_1*2^(-s) + ... in
    2^(-s) times a product of shifted zeta factors.

    shifts is a multiset (repeats allowed); the empty tuple means the bare
    polynomial with no zeta factor at all.
    """

    two_adic_poly: tuple[int, ...]
    shifts: tuple[int, ...]

    def __post_init__(self) -> None:
        poly = tuple(self.two_adic_poly)
        shifts = tuple(sorted(self.shifts))
        if not poly:
            raise ValueError("polynomial part must have at least one coefficient")
        if any(k < 0 for k in shifts):
            raise ValueError(f"negative zeta shift in {shifts}")
        object.__setattr__(self, "two_adic_poly", poly)
        object.__setattr__(self, "shifts", shifts)


@dataclass(frozen=True)
class ClosedFormExpr:
    """A sum of Terms, e.g. one term (1 + 8*2^(-2s), shifts (0, 1, 2))."""

    terms: tuple[Term, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", tuple(self.terms))


def eval_closed_form(expr: ClosedFormExpr, limit: int = DEFAULT_LIMIT) -> CoefficientSeries:
    """Exact coefficients 1..limit of a closed form.

    Each term's zeta factors are convolved together, then every monomial
    q_j * 2^(-js) is applied as a scale-shift with modulus 2^j, and the
    terms are summed.
    """
    if limit < 1:
        raise ValueError(f"limit must be >= 1, got {limit}")
    total = zero_series(limit)
    for term in expr.terms:
        product = identity_series(limit)
        for k in term.shifts:
            product = convolve(product, zeta_shift_coeffs(k, limit))
        for j, q in enumerate(term.two_adic_poly):
            if q:
                total = add(total, scale_shift(product, 2**j, q))
    return total


def is_multiplicative(a: CoefficientSeries) -> bool:
    """True iff a_{mn} = a_m * a_n for every coprime pair with mn <= limit.

    All coprime pairs are checked, not just prime-power splits.  A series
    with a_1 != 1 is not multiplicative.
    """
    if a[1] != 1:
        return False
    for m, k in itertools.combinations(range(2, a.limit // 2 + 1), 2):
        if m * k <= a.limit and gcd(m, k) == 1 and a[m * k] != a[m] * a[k]:
            return False
    return True
