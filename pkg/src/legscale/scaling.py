"""Expansions of the argument-scaled Legendre polynomial P_n(lam*x).

Two equivalent coefficient families:

* derivative form:  P_n(lam*x) = sum_k a_k * d^k/dx^k P_{n-k}(x),
  a_k = lam^(n-2k) (lam^2-1)^k / (2^k k!);
* legendre form:    P_n(lam*x) = sum_k b_k * P_{n-2k}(x),
  where each b_k collects the derivative-form contributions through the
  doubly-indexed weights alpha_nki.

k runs over 0 ... floor(n/2) in both forms. Everything is exact for any
rational lam, including lam = 0 (0^0 = 1 keeps the constant term alive, so
P_n(0) is reachable).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from types import MappingProxyType
from typing import Dict, Mapping, Tuple

from .rationals import (
    RationalLike,
    as_rational,
    falling_factorial,
    format_rational,
    parse_rational,
)

__all__ = [
    "FORM_DERIVATIVE",
    "FORM_LEGENDRE",
    "ScalingExpansion",
    "a_coefficient",
    "expand_derivative_form",
    "alpha_nki",
    "b_coefficient",
    "b_coefficient_untruncated",
    "expand_legendre_form",
    "expand_legendre_form_untruncated",
]

FORM_DERIVATIVE = "derivative"
FORM_LEGENDRE = "legendre"

_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class ScalingExpansion:
    """Coefficient map for one expansion of P_n(lam*x).

    ``coeffs[k]``, k = 0 ... floor(n/2), multiplies d^k P_{n-k} in the
    derivative form and P_{n-2k} in the legendre form. The map is dense:
    zero entries are kept so every admissible k is listed.
    """

    lam: Fraction
    n: int
    form: str
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.form not in (FORM_DERIVATIVE, FORM_LEGENDRE):
            raise ValueError(f"unknown form {self.form!r}")
        if self.n < 0:
            raise ValueError("degree must be >= 0")
        expected = self.n // 2 + 1
        if len(self.coeffs) != expected:
            raise ValueError(f"expected {expected} coefficients, got {len(self.coeffs)}")

    def coefficient(self, k: int) -> Fraction:
        if not 0 <= k <= self.n // 2:
            raise ValueError(f"index k must lie in 0 ... {self.n // 2}")
        return self.coeffs[k]

    def to_json(self) -> dict:
        return {
            "lambda": format_rational(self.lam),
            "n": self.n,
            "form": self.form,
            "coeffs": {str(k): format_rational(c) for k, c in enumerate(self.coeffs)},
        }

    @classmethod
    def from_json(cls, data) -> "ScalingExpansion":
        n = int(data["n"])
        raw = {int(k): parse_rational(c) for k, c in data["coeffs"].items()}
        coeffs = tuple(raw.get(k, Fraction(0)) for k in range(n // 2 + 1))
        return cls(parse_rational(data["lambda"]), n, data["form"], coeffs)


def _check_nk(n: int, k: int) -> None:
    if n < 0:
        raise ValueError("degree must be >= 0")
    if not 0 <= k <= n // 2:
        raise ValueError(f"index k must lie in 0 ... {n // 2}")


def a_coefficient(lam: RationalLike, n: int, k: int) -> Fraction:
    """Weight of d^k P_{n-k} in P_n(lam*x): lam^(n-2k) (lam^2-1)^k / (2^k k!)."""
    _check_nk(n, k)
    factor = as_rational(lam)
    return factor ** (n - 2 * k) * (factor * factor - 1) ** k / (Fraction(2) ** k * factorial(k))


def expand_derivative_form(lam: RationalLike, n: int) -> ScalingExpansion:
    """All derivative-form weights of P_n(lam*x), k = 0 ... floor(n/2)."""
    factor = as_rational(lam)
    if n < 0:
        raise ValueError("degree must be >= 0")
    return ScalingExpansion(
        factor, n, FORM_DERIVATIVE, tuple(a_coefficient(factor, n, k) for k in range(n // 2 + 1))
    )


@lru_cache(maxsize=None)
def _alpha_grid(n: int, kmax: int) -> Mapping[Tuple[int, int], Fraction]:
    """Doubly-indexed weights alpha_nki for all 0 <= i <= k <= kmax.

    Independent of lam, so the grid is cached per degree; the returned
    mapping is read-only and every value immutable, keeping the cache
    invisible to callers and safe to share between threads.
    """
    grid: Dict[Tuple[int, int], Fraction] = {}
    for i in range(kmax + 1):
        for k in range(i, kmax + 1):
            lead = (
                Fraction(2) ** (k + i)
                * falling_factorial(n - k + i - _HALF, k - i)
                * falling_factorial(n - k, i)
                * falling_factorial(n - 2 * k + 2 * i - _HALF, 2 * i)
                / (falling_factorial(2 * i, 2 * i) * falling_factorial(n - k + i - _HALF, i))
            )
            correction = Fraction(0)
            for l in range(i):
                correction += (
                    falling_factorial(2 * (n - 2 * k + i - l), 2 * (i - l))
                    / falling_factorial(2 * (i - l), 2 * (i - l))
                ) * grid[(k - i + l, l)]
            grid[(k, i)] = lead - correction
    return MappingProxyType(grid)


def alpha_nki(n: int, k: int, i: int) -> Fraction:
    """Depth-i weight inside the k-th legendre-form coefficient.

    Semantically this is the coefficient of P_{n-2k} in the Legendre
    expansion of d^(k-i) P_{n-k+i}; in particular it is 1 at i = k = 0 and
    0 at i = k >= 1 (the zeroth derivative expands trivially).
    """
    if n < 0:
        raise ValueError("degree must be >= 0")
    if not 0 <= i <= k <= n // 2:
        raise ValueError("indices must satisfy 0 <= i <= k <= floor(n/2)")
    return _alpha_grid(n, n // 2)[(k, i)]


def _b_sum(factor: Fraction, n: int, k: int, top_i: int) -> Fraction:
    grid = _alpha_grid(n, n // 2)
    total = Fraction(0)
    for i in range(top_i + 1):
        weight = (
            factor ** (n - 2 * k + 2 * i)
            * (factor * factor - 1) ** (k - i)
            / (Fraction(2) ** (k - i) * factorial(k - i))
        )
        total += weight * grid[(k, i)]
    return total


def b_coefficient(lam: RationalLike, n: int, k: int) -> Fraction:
    """Weight of P_{n-2k} in P_n(lam*x), summing depths i = 0 ... max(k-1, 0)."""
    _check_nk(n, k)
    return _b_sum(as_rational(lam), n, k, max(k - 1, 0))


def b_coefficient_untruncated(lam: RationalLike, n: int, k: int) -> Fraction:
    """Variant of `b_coefficient` summing depths i = 0 ... k.

    The extra i = k term carries the weight alpha_nki(n, k, k), which is 0
    for every k >= 1, so the two must agree; the test suite proves this over
    the full sweep instead of assuming it.
    """
    _check_nk(n, k)
    return _b_sum(as_rational(lam), n, k, k)


def expand_legendre_form(lam: RationalLike, n: int) -> ScalingExpansion:
    """All legendre-form weights of P_n(lam*x), k = 0 ... floor(n/2)."""
    factor = as_rational(lam)
    if n < 0:
        raise ValueError("degree must be >= 0")
    return ScalingExpansion(
        factor, n, FORM_LEGENDRE, tuple(b_coefficient(factor, n, k) for k in range(n // 2 + 1))
    )


def expand_legendre_form_untruncated(lam: RationalLike, n: int) -> ScalingExpansion:
    """Legendre-form weights using the untruncated depth sum (i up to k)."""
    factor = as_rational(lam)
    if n < 0:
        raise ValueError("degree must be >= 0")
    return ScalingExpansion(
        factor,
        n,
        FORM_LEGENDRE,
        tuple(b_coefficient_untruncated(factor, n, k) for k in range(n // 2 + 1)),
    )
