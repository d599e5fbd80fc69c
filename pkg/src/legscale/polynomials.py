"""Dense exact polynomials, Legendre constructions, and basis machinery.

Three independent ways of building P_n live here (three-term recurrence,
repeated differentiation of (x^2-1)^n, terminating Gauss series), together
with the formal operations every identity check rests on: differentiation,
argument scaling, the exact inner product on [-1, 1], and projection onto
the Legendre basis.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

from .rationals import (
    RationalLike,
    as_rational,
    binomial,
    format_rational,
    parse_rational,
    rising_factorial,
)

__all__ = [
    "Poly",
    "LegendreSeries",
    "legendre_bonnet",
    "legendre_rodrigues",
    "legendre_murphy",
    "differentiate",
    "scale_argument",
    "inner_product",
    "project_to_legendre",
    "to_poly",
]


class Poly:
    """Univariate polynomial over Fraction in the monomial basis.

    Coefficients are stored densely in ascending degree: index m holds the
    coefficient of x^m. Trailing zeros are stripped, so the zero polynomial
    stores nothing and reports degree None. Instances are immutable.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()) -> None:
        items = [as_rational(c) for c in coeffs]
        while items and items[-1] == 0:
            items.pop()
        self._coeffs: Tuple[Fraction, ...] = tuple(items)

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def one(cls) -> "Poly":
        return cls((1,))

    @classmethod
    def monomial(cls, degree: int, coeff: RationalLike = 1) -> "Poly":
        if degree < 0:
            raise ValueError("monomial degree must be >= 0")
        c = as_rational(coeff)
        if c == 0:
            return cls()
        return cls((Fraction(0),) * degree + (c,))

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> Union[int, None]:
        """Degree of the polynomial, or None for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, m: int) -> Fraction:
        """Coefficient of x^m (0 beyond the stored degree)."""
        if m < 0:
            raise ValueError("monomial degree must be >= 0")
        if m >= len(self._coeffs):
            return Fraction(0)
        return self._coeffs[m]

    def evaluate(self, x: RationalLike) -> Fraction:
        """Exact Horner evaluation at a rational point."""
        point = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * point + c
        return acc

    __call__ = evaluate

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for m, c in enumerate(b):
            out[m] += c
        return Poly(out)

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self._coeffs))

    def __mul__(self, other):
        if isinstance(other, Poly):
            if self.is_zero or other.is_zero:
                return Poly()
            a, b = self._coeffs, other._coeffs
            out = [Fraction(0)] * (len(a) + len(b) - 1)
            for i, ai in enumerate(a):
                if not ai:
                    continue
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] += ai * bj
            return Poly(out)
        if isinstance(other, (int, Fraction)):
            factor = as_rational(other)
            return Poly(tuple(c * factor for c in self._coeffs))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.__mul__(other)
        return NotImplemented

    def __truediv__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            divisor = as_rational(scalar)
            if divisor == 0:
                raise ZeroDivisionError("division of a polynomial by zero")
            return Poly(tuple(c / divisor for c in self._coeffs))
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __repr__(self) -> str:
        inside = ", ".join(format_rational(c) for c in self._coeffs)
        return f"Poly([{inside}])"

    def to_json(self) -> dict:
        return {"coeffs": [format_rational(c) for c in self._coeffs]}

    @classmethod
    def from_json(cls, data: Mapping) -> "Poly":
        return cls(parse_rational(c) for c in data["coeffs"])


class LegendreSeries:
    """Finite combination sum_m c_m * P_m(x), stored sparsely by degree.

    Zero coefficients are never stored, so the empty series is the zero
    function. Instances are immutable; duplicate degrees passed to the
    constructor are accumulated.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[int, RationalLike], Iterable[Tuple[int, RationalLike]]] = ()) -> None:
        data: Dict[int, Fraction] = {}
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        for m, c in pairs:
            degree = int(m)
            if degree < 0:
                raise ValueError("series degrees must be >= 0")
            value = data.get(degree, Fraction(0)) + as_rational(c)
            if value == 0:
                data.pop(degree, None)
            else:
                data[degree] = value
        self._terms: Dict[int, Fraction] = dict(sorted(data.items()))

    @property
    def terms(self) -> Dict[int, Fraction]:
        """Degree -> coefficient map (a copy; ascending degree)."""
        return dict(self._terms)

    def coefficient(self, m: int) -> Fraction:
        return self._terms.get(m, Fraction(0))

    def degrees(self) -> Tuple[int, ...]:
        return tuple(self._terms)

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        return iter(self._terms.items())

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, LegendreSeries):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        inside = ", ".join(f"{m}: {format_rational(c)}" for m, c in self._terms.items())
        return f"LegendreSeries({{{inside}}})"

    def to_json(self) -> dict:
        return {"terms": {str(m): format_rational(c) for m, c in self._terms.items()}}

    @classmethod
    def from_json(cls, data: Mapping) -> "LegendreSeries":
        return cls((int(m), parse_rational(c)) for m, c in data["terms"].items())


@lru_cache(maxsize=None)
def legendre_bonnet(n: int) -> Poly:
    """P_n via the three-term recurrence (m+1)P_{m+1} = (2m+1)xP_m - mP_{m-1}.

    Seeded with P_0 = 1 and P_1 = x. Results are cached; Poly is immutable,
    so sharing across callers and threads is safe.
    """
    if n < 0:
        raise ValueError("Legendre degree must be >= 0")
    prev = Poly((1,))
    if n == 0:
        return prev
    cur = Poly((0, 1))
    for m in range(1, n):
        shifted = Poly((Fraction(0),) + cur.coeffs)  # x * P_m
        prev, cur = cur, Fraction(2 * m + 1, m + 1) * shifted - Fraction(m, m + 1) * prev
    return cur


def legendre_rodrigues(n: int) -> Poly:
    """P_n as the n-th derivative of (x^2-1)^n divided by 2^n n!.

    (x^2-1)^n is expanded binomially, so this path shares no recurrence with
    `legendre_bonnet`.
    """
    if n < 0:
        raise ValueError("Legendre degree must be >= 0")
    base = [Fraction(0)] * (2 * n + 1)
    for j in range(n + 1):
        base[2 * j] = binomial(n, j) * (-1) ** (n - j)
    return differentiate(Poly(base), n) / (Fraction(2) ** n * factorial(n))


def legendre_murphy(n: int) -> Poly:
    """P_n as the terminating Gauss series in z = (1-x)/2.

    P_n(x) = sum_{j=0}^{n} (-n)_j (n+1)_j / ((1)_j j!) * z^j; the rising
    factorial (-n)_j kills every term past j = n.
    """
    if n < 0:
        raise ValueError("Legendre degree must be >= 0")
    half = Fraction(1, 2)
    z = Poly((half, -half))
    power = Poly.one()
    acc = Poly.zero()
    for j in range(n + 1):
        if j:
            power = power * z
        coeff = rising_factorial(-n, j) * rising_factorial(n + 1, j) / Fraction(factorial(j) ** 2)
        acc = acc + coeff * power
    return acc


def differentiate(p: Poly, k: int = 1) -> Poly:
    """Exact k-fold formal derivative; zero once k exceeds the degree."""
    if k < 0:
        raise ValueError("derivative order must be >= 0")
    coeffs = list(p.coeffs)
    for _ in range(k):
        if not coeffs:
            break
        coeffs = [m * coeffs[m] for m in range(1, len(coeffs))]
    return Poly(coeffs)


def scale_argument(p: Poly, lam: RationalLike) -> Poly:
    """q with q(x) = p(lam * x): coefficient m picks up lam^m."""
    factor = as_rational(lam)
    out = []
    power = Fraction(1)
    for m, c in enumerate(p.coeffs):
        if m:
            power *= factor
        out.append(c * power)
    return Poly(out)


def inner_product(p: Poly, q: Poly) -> Fraction:
    """Integral of p*q over [-1, 1] by exact term-wise monomial integration.

    Odd total powers integrate to zero and are skipped without arithmetic.
    """
    total = Fraction(0)
    for i, a in enumerate(p.coeffs):
        if not a:
            continue
        for j, b in enumerate(q.coeffs):
            if b and (i + j) % 2 == 0:
                total += a * b * Fraction(2, i + j + 1)
    return total


def project_to_legendre(p: Poly) -> LegendreSeries:
    """Legendre coefficients by exact integration: c_m = (2m+1)/2 * <p, P_m>.

    Deliberately walks every degree up to deg(p) so vanishing coefficients
    are computed, not assumed; this keeps the projection usable as an
    independent check on any coefficient formula.
    """
    if p.is_zero:
        return LegendreSeries()
    found = []
    for m in range(p.degree + 1):
        c = inner_product(p, legendre_bonnet(m)) * Fraction(2 * m + 1, 2)
        if c:
            found.append((m, c))
    return LegendreSeries(found)


def to_poly(series: LegendreSeries) -> Poly:
    """Rebuild sum_m c_m * P_m as a dense polynomial."""
    acc = Poly.zero()
    for m, c in series.items():
        acc = acc + c * legendre_bonnet(m)
    return acc
