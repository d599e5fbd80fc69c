"""Legendre-series expansions of repeated derivatives of P_n.

d^k/dx^k P_n = sum_{i=0}^{floor((n-k)/2)} alpha_{n-k-2i} * P_{n-k-2i}(x)

Three independent routes produce the same alpha set:

* telescoping: unroll d/dx P_m = sum_{m' = m-1, m-3, ...} (2m'+1) P_{m'}
  k times, accumulating coefficients exactly;
* triangular: match coefficients of both sides written as terminating
  series in z = (1-x)/2 and solve the resulting triangular system;
* closed recurrence: evaluate each alpha from falling factorials and the
  previously computed alphas.

Any disagreement between the routes, or with the formal derivative itself,
signals a bug; the verification module sweeps exactly that.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, List, Tuple

from .polynomials import LegendreSeries
from .rationals import (
    binomial,
    falling_factorial,
    format_rational,
    parse_rational,
    rising_factorial,
)

__all__ = [
    "DerivExpansion",
    "DegeneratePivotError",
    "deriv_expand_telescoping",
    "deriv_expand_triangular",
    "deriv_expand_recurrence",
    "murphy_deriv_series",
    "alpha_closed_recurrence",
]

_HALF = Fraction(1, 2)


class DegeneratePivotError(ArithmeticError):
    """A diagonal entry of the coefficient-matching system vanished.

    This cannot happen for valid (degree, order) pairs; raising instead of
    silently dividing pins an indexing bug to its source.
    """


@dataclass(frozen=True)
class DerivExpansion:
    """Coefficients of d^k/dx^k P_n as a combination of P_{n-k-2i}.

    ``alphas[i]`` multiplies P_{n-k-2i} for i = 0 ... floor((n-k)/2). The
    tuple is empty when k > n, where the derivative is identically zero.
    """

    n: int
    k: int
    alphas: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or self.k < 0:
            raise ValueError("degree and order must be >= 0")
        expected = 0 if self.k > self.n else (self.n - self.k) // 2 + 1
        if len(self.alphas) != expected:
            raise ValueError(f"expected {expected} coefficients, got {len(self.alphas)}")

    @property
    def is_zero(self) -> bool:
        return not self.alphas

    def degree_of(self, i: int) -> int:
        """Legendre degree multiplied by alphas[i]."""
        return self.n - self.k - 2 * i

    def alpha_for_degree(self, m: int) -> Fraction:
        """Coefficient of P_m in the expansion (0 when m does not occur)."""
        offset = self.n - self.k - m
        if m < 0 or offset < 0 or offset % 2:
            return Fraction(0)
        return self.alphas[offset // 2]

    def to_series(self) -> LegendreSeries:
        return LegendreSeries((self.degree_of(i), a) for i, a in enumerate(self.alphas))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "alphas": {str(self.degree_of(i)): format_rational(a) for i, a in enumerate(self.alphas)},
        }

    @classmethod
    def from_json(cls, data) -> "DerivExpansion":
        n, k = int(data["n"]), int(data["k"])
        by_degree = {int(m): parse_rational(c) for m, c in data["alphas"].items()}
        count = 0 if k > n else (n - k) // 2 + 1
        return cls(n, k, tuple(by_degree.get(n - k - 2 * i, Fraction(0)) for i in range(count)))


def _check_orders(n: int, k: int) -> None:
    if n < 0 or k < 0:
        raise ValueError("degree and order must be >= 0")


def deriv_expand_telescoping(n: int, k: int) -> DerivExpansion:
    """Expand d^k P_n by applying the single-derivative rewrite k times.

    Each pass replaces d/dx P_m with sum over m' = m-1, m-3, ... >= 0 of
    (2m'+1) P_{m'}; coefficients accumulate exactly. Returns the empty
    expansion when k > n.
    """
    _check_orders(n, k)
    if k > n:
        return DerivExpansion(n, k, ())
    current: Dict[int, Fraction] = {n: Fraction(1)}
    for _ in range(k):
        nxt: Dict[int, Fraction] = {}
        for m, c in current.items():
            for target in range(m - 1, -1, -2):
                nxt[target] = nxt.get(target, Fraction(0)) + c * (2 * target + 1)
        current = nxt
    count = (n - k) // 2 + 1
    return DerivExpansion(n, k, tuple(current.get(n - k - 2 * i, Fraction(0)) for i in range(count)))


def murphy_deriv_series(n: int, k: int) -> Tuple[Fraction, ...]:
    """z-power coefficients of d^k P_n, where z = (1-x)/2.

    Differentiating the terminating Gauss series for P_n k times gives

        d^k/dx^k P_n = C(n,k) (n+1)_k / 2^k
                       * sum_{j=0}^{n-k} (k-n)_j (n+k+1)_j / ((k+1)_j j!) * z^j ;

    the returned tuple holds the exact coefficient of z^j at index j.
    Rejects k > n: the derivative is zero there but this series form is
    not defined.
    """
    _check_orders(n, k)
    if k > n:
        raise ValueError("series form requires k <= n")
    prefactor = binomial(n, k) * rising_factorial(n + 1, k) / Fraction(2) ** k
    out: List[Fraction] = []
    for j in range(n - k + 1):
        numerator = rising_factorial(k - n, j) * rising_factorial(n + k + 1, j)
        denominator = rising_factorial(k + 1, j) * factorial(j)
        out.append(prefactor * numerator / denominator)
    return tuple(out)


def deriv_expand_triangular(n: int, k: int) -> DerivExpansion:
    """Solve the coefficient-matching system in z = (1-x)/2 top-down.

    Row j equates the z^j coefficient of d^k P_n with the z^j coefficient of
    sum_i alpha_i P_{N-2i} (N = n-k). Rows are consumed from j = N downward:
    every even offset N-j introduces exactly one new unknown, and the
    odd-offset rows -- redundant by construction -- are kept as consistency
    checks instead of being discarded, so a sign or index slip surfaces here
    rather than downstream.
    """
    _check_orders(n, k)
    if k > n:
        return DerivExpansion(n, k, ())
    big_n = n - k
    targets = murphy_deriv_series(n, k)
    # z^j coefficients of P_N; lower degrees follow by a falling-factorial
    # ratio which is exactly zero whenever j exceeds N - 2i.
    top_row = tuple(
        rising_factorial(-big_n, j) * rising_factorial(big_n + 1, j) / Fraction(factorial(j) ** 2)
        for j in range(big_n + 1)
    )

    def basis_coeff(j: int, i: int) -> Fraction:
        return top_row[j] * falling_factorial(big_n - j, 2 * i) / falling_factorial(big_n + j, 2 * i)

    alphas: List[Fraction] = []
    for j in range(big_n, -1, -1):
        offset = big_n - j
        acc = Fraction(0)
        for i, alpha in enumerate(alphas):
            acc += alpha * basis_coeff(j, i)
        if offset % 2 == 0:
            pivot = basis_coeff(j, offset // 2)
            if pivot == 0:
                raise DegeneratePivotError(f"vanishing pivot at row {j} for (n, k) = ({n}, {k})")
            alphas.append((targets[j] - acc) / pivot)
        elif acc != targets[j]:
            raise ArithmeticError(
                f"redundant row {j} violated for (n, k) = ({n}, {k}): {acc} != {targets[j]}"
            )
    return DerivExpansion(n, k, tuple(alphas))


def alpha_closed_recurrence(n: int, k: int, i: int) -> Fraction:
    """Coefficient of P_{n-k-2i} in d^k P_n via the closed recurrence.

    alpha_{n-k-2i} = 2^(k+2i) (n-1/2)^(k_) (n-i)^(i_) (n-k-1/2)^(2i_)
                     / ((2i)^(2i_) (n-1/2)^(i_))
                     - sum_{l=0}^{i-1} (2(n-k-i-l))^(2(i-l)_)
                       / (2(i-l))^(2(i-l)_) * alpha_{n-k-2l}

    with x^(m_) the falling factorial; the sum is empty at i = 0. Earlier
    alphas are memoized within the evaluation, never across calls.
    """
    _check_orders(n, k)
    if k > n:
        raise ValueError("recurrence defined for k <= n")
    if not 0 <= i <= (n - k) // 2:
        raise ValueError(f"index i must lie in 0 ... {(n - k) // 2}")
    return _alpha_values(n, k, i)[i]


def _alpha_values(n: int, k: int, top_i: int) -> List[Fraction]:
    """Alphas for depths 0 ... top_i; the running list is the memo."""
    values: List[Fraction] = []
    for i in range(top_i + 1):
        lead = (
            Fraction(2) ** (k + 2 * i)
            * falling_factorial(n - _HALF, k)
            * falling_factorial(n - i, i)
            * falling_factorial(n - k - _HALF, 2 * i)
            / (falling_factorial(2 * i, 2 * i) * falling_factorial(n - _HALF, i))
        )
        correction = Fraction(0)
        for l in range(i):
            correction += (
                falling_factorial(2 * (n - k - i - l), 2 * (i - l))
                / falling_factorial(2 * (i - l), 2 * (i - l))
            ) * values[l]
        values.append(lead - correction)
    return values


def deriv_expand_recurrence(n: int, k: int) -> DerivExpansion:
    """Full expansion assembled from the closed recurrence."""
    _check_orders(n, k)
    if k > n:
        return DerivExpansion(n, k, ())
    return DerivExpansion(n, k, tuple(_alpha_values(n, k, (n - k) // 2)))
