"""Brute-force verification engines.

Every check reconstructs a claimed expansion with generic polynomial
machinery (basis construction, formal derivatives, argument scaling, exact
integrals) and compares it coefficient by coefficient against an
independently computed target. The scalar coefficient formulas
(`a_coefficient`, `b_coefficient`, `alpha_*`) are never called here: the
whole-expansion entry points supply the claims, and the target side is
built from polynomial primitives alone. The first failing case in sweep
order is recorded with full coefficient dumps of both sides, since an
index-convention slip is the likeliest failure and raw dumps localize it
immediately.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, Optional, Sequence, Tuple

from .derivatives import (
    deriv_expand_recurrence,
    deriv_expand_telescoping,
    deriv_expand_triangular,
)
from .polynomials import (
    Poly,
    differentiate,
    legendre_bonnet,
    project_to_legendre,
    scale_argument,
    to_poly,
)
from .rationals import RationalLike, as_rational, binomial, format_rational
from .scaling import (
    FORM_DERIVATIVE,
    FORM_LEGENDRE,
    expand_derivative_form,
    expand_legendre_form,
    expand_legendre_form_untruncated,
)

__all__ = [
    "DEFAULT_LAMBDAS",
    "NONZERO_LAMBDAS",
    "Counterexample",
    "VerificationReport",
    "verify_scaling_identity",
    "verify_derivative_identity",
    "verify_surplus_rows",
    "verify_recurrence_vs_telescoping",
    "verify_replay",
    "replay_rodrigues_derivation",
    "random_lambdas",
]

# Default sweep: zero, the two fixed points of scaling, and assorted
# integer / non-integer rationals of both signs.
DEFAULT_LAMBDAS: Tuple[Fraction, ...] = tuple(
    Fraction(s) for s in ("0", "1", "-1", "2", "1/2", "-3/5", "7/3")
)
NONZERO_LAMBDAS: Tuple[Fraction, ...] = tuple(v for v in DEFAULT_LAMBDAS if v != 0)


@dataclass(frozen=True)
class Counterexample:
    """Failing parameters plus the full coefficient lists of both sides."""

    params: Dict[str, object]
    lhs: Tuple[str, ...]
    rhs: Tuple[str, ...]

    def to_json(self) -> dict:
        return {"params": dict(self.params), "lhs": list(self.lhs), "rhs": list(self.rhs)}


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one verification sweep; passed iff no counterexample."""

    subject: str
    n_range: Tuple[int, int]
    k_range: Optional[Tuple[int, int]]
    lambdas: Optional[Tuple[Fraction, ...]]
    passed: bool
    counterexample: Optional[Counterexample]
    details: Dict[str, object] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.passed != (self.counterexample is None):
            raise ValueError("passed must hold exactly when no counterexample is recorded")

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "n_range": list(self.n_range),
            "k_range": list(self.k_range) if self.k_range is not None else None,
            "lambdas": [format_rational(v) for v in self.lambdas] if self.lambdas is not None else None,
            "status": self.status,
            "counterexample": self.counterexample.to_json() if self.counterexample else None,
            "details": dict(self.details),
        }


def _dump(p: Poly, width: int) -> Tuple[str, ...]:
    """Monomial coefficients as strings, zero-padded to a common width."""
    return tuple(format_rational(p.coefficient(m)) for m in range(width))


def _poly_mismatch(params: Dict[str, object], claimed: Poly, target: Poly) -> Counterexample:
    width = max(len(claimed.coeffs), len(target.coeffs), 1)
    return Counterexample(params, _dump(claimed, width), _dump(target, width))


def _clean_lambdas(lambdas: Sequence[RationalLike]) -> Tuple[Fraction, ...]:
    values = tuple(as_rational(v) for v in lambdas)
    if not values:
        raise ValueError("lambda set must be nonempty")
    return values


def verify_scaling_identity(
    n_max: int,
    lambdas: Sequence[RationalLike] = DEFAULT_LAMBDAS,
    form: str = FORM_LEGENDRE,
) -> VerificationReport:
    """Check every claimed expansion of P_n(lam*x) against direct scaling.

    For each (n, lam) the claimed coefficients are recombined with freshly
    built basis polynomials and compared with scale_argument(P_n, lam). In
    the legendre form the coefficients are additionally matched one by one
    against exact-projection values, and the truncated/untruncated depth
    sums are compared, with the verdict recorded under
    details["limit_variants_agree"].
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if form not in (FORM_DERIVATIVE, FORM_LEGENDRE):
        raise ValueError(f"unknown form {form!r}")
    values = _clean_lambdas(lambdas)
    subject = "eq9" if form == FORM_DERIVATIVE else "eq13"
    counterexample: Optional[Counterexample] = None
    variants_agree = True

    for n in range(n_max + 1):
        if form == FORM_DERIVATIVE:
            parts = [differentiate(legendre_bonnet(n - k), k) for k in range(n // 2 + 1)]
        else:
            parts = [legendre_bonnet(n - 2 * k) for k in range(n // 2 + 1)]
        for lam in values:
            target = scale_argument(legendre_bonnet(n), lam)
            if form == FORM_DERIVATIVE:
                expansion = expand_derivative_form(lam, n)
            else:
                expansion = expand_legendre_form(lam, n)
                if expand_legendre_form_untruncated(lam, n).coeffs != expansion.coeffs:
                    variants_agree = False
            rebuilt = Poly.zero()
            for c, part in zip(expansion.coeffs, parts):
                if c:
                    rebuilt = rebuilt + c * part
            params = {"n": n, "lambda": format_rational(lam), "check": "reconstruction"}
            if rebuilt != target:
                counterexample = _poly_mismatch(params, rebuilt, target)
                break
            if form == FORM_LEGENDRE:
                projected = project_to_legendre(target)
                claimed = {n - 2 * k: c for k, c in enumerate(expansion.coeffs) if c != 0}
                if claimed != projected.terms:
                    counterexample = Counterexample(
                        {**params, "check": "projection"},
                        tuple(format_rational(claimed.get(m, Fraction(0))) for m in range(n + 1)),
                        tuple(format_rational(projected.coefficient(m)) for m in range(n + 1)),
                    )
                    break
        if counterexample:
            break

    details: Dict[str, object] = {}
    if form == FORM_LEGENDRE:
        details["limit_variants_agree"] = variants_agree
    return VerificationReport(
        subject=subject,
        n_range=(0, n_max),
        k_range=(0, n_max // 2),
        lambdas=values,
        passed=counterexample is None,
        counterexample=counterexample,
        details=details,
    )


def _alphas_dump(expansion) -> Tuple[str, ...]:
    return tuple(format_rational(a) for a in expansion.alphas)


def verify_derivative_identity(n_max: int) -> VerificationReport:
    """Check all three derivative-expansion routes against formal derivatives.

    For every 0 <= k <= n <= n_max the telescoping, triangular and
    closed-recurrence expansions must agree coefficient by coefficient and,
    rebuilt through the Legendre basis, must equal differentiate(P_n, k)
    exactly. Orders k = n+1, n+2 are also swept: there the expansion is
    empty and the derivative the zero polynomial.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    counterexample: Optional[Counterexample] = None
    for n in range(n_max + 1):
        for k in range(n + 3):
            expected = differentiate(legendre_bonnet(n), k)
            routes = {
                "telescoping": deriv_expand_telescoping(n, k),
                "triangular": deriv_expand_triangular(n, k),
                "recurrence": deriv_expand_recurrence(n, k),
            }
            base = routes["telescoping"]
            for name, other in routes.items():
                if other.alphas != base.alphas:
                    counterexample = Counterexample(
                        {"n": n, "k": k, "check": f"telescoping-vs-{name}"},
                        _alphas_dump(base),
                        _alphas_dump(other),
                    )
                    break
            if counterexample is None:
                rebuilt = to_poly(base.to_series())
                if rebuilt != expected:
                    counterexample = _poly_mismatch(
                        {"n": n, "k": k, "check": "against-derivative"}, rebuilt, expected
                    )
            if counterexample:
                break
        if counterexample:
            break
    return VerificationReport(
        subject="eq19",
        n_range=(0, n_max),
        k_range=(0, n_max),
        lambdas=None,
        passed=counterexample is None,
        counterexample=counterexample,
    )


def _to_z_coeffs(p: Poly, width: int) -> Tuple[Fraction, ...]:
    """Coefficients of p written in powers of z, where x = 1 - 2z."""
    substituted = Poly.zero()
    power = Poly.one()
    step = Poly((1, -2))
    for m, c in enumerate(p.coeffs):
        if m:
            power = power * step
        if c:
            substituted = substituted + c * power
    return tuple(substituted.coefficient(j) for j in range(width))


def verify_surplus_rows(n_max: int) -> VerificationReport:
    """Re-check the redundant rows of the coefficient-matching system.

    The triangular solve determines one unknown per even offset; the
    odd-offset rows are over-determined. Here both row sides are rebuilt
    purely by polynomial substitution x = 1 - 2z and the solved alphas must
    satisfy every such surplus row exactly.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    counterexample: Optional[Counterexample] = None
    for n in range(n_max + 1):
        for k in range(n + 1):
            big_n = n - k
            alphas = deriv_expand_triangular(n, k).alphas
            lhs_rows = _to_z_coeffs(differentiate(legendre_bonnet(n), k), big_n + 1)
            basis_rows = [
                _to_z_coeffs(legendre_bonnet(big_n - 2 * i), big_n + 1) for i in range(len(alphas))
            ]
            for j in range(big_n + 1):
                if (big_n - j) % 2 == 0:
                    continue
                combined = Fraction(0)
                for alpha, row in zip(alphas, basis_rows):
                    combined += alpha * row[j]
                if combined != lhs_rows[j]:
                    counterexample = Counterexample(
                        {"n": n, "k": k, "row": j, "check": "surplus-row"},
                        (format_rational(combined),),
                        (format_rational(lhs_rows[j]),),
                    )
                    break
            if counterexample:
                break
        if counterexample:
            break
    return VerificationReport(
        subject="eq24-rows",
        n_range=(0, n_max),
        k_range=(0, n_max),
        lambdas=None,
        passed=counterexample is None,
        counterexample=counterexample,
    )


def verify_recurrence_vs_telescoping(n_max: int) -> VerificationReport:
    """Cross-check the closed recurrence against the telescoping route."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    counterexample: Optional[Counterexample] = None
    for n in range(n_max + 1):
        for k in range(n + 1):
            tele = deriv_expand_telescoping(n, k)
            recur = deriv_expand_recurrence(n, k)
            if tele.alphas != recur.alphas:
                counterexample = Counterexample(
                    {"n": n, "k": k, "check": "recurrence-vs-telescoping"},
                    _alphas_dump(recur),
                    _alphas_dump(tele),
                )
                break
        if counterexample:
            break
    return VerificationReport(
        subject="eq26-vs-telescoping",
        n_range=(0, n_max),
        k_range=(0, n_max),
        lambdas=None,
        passed=counterexample is None,
        counterexample=counterexample,
    )


def replay_rodrigues_derivation(lam: RationalLike, n: int) -> Poly:
    """P_n(lam*x) rebuilt by replaying its generating construction.

    Expand ((x^2-1) + (lam^2-1)/lam^2)^n binomially, differentiate the sum n
    times term by term, then apply the lam^n / (2^n n!) prefactor. lam = 0
    is rejected: this route divides by lam^2, unlike the coefficient
    formulas, which stay valid there.
    """
    factor = as_rational(lam)
    if factor == 0:
        raise ValueError("lambda must be nonzero for the derivation replay")
    if n < 0:
        raise ValueError("degree must be >= 0")
    shift = (factor * factor - 1) / (factor * factor)
    ring = Poly((-1, 0, 1))  # x^2 - 1
    power = Poly.one()
    acc = Poly.zero()
    for k in range(n + 1):
        if k:
            power = power * ring
        acc = acc + (binomial(n, k) * shift ** (n - k)) * power
    return (factor ** n / (Fraction(2) ** n * factorial(n))) * differentiate(acc, n)


def verify_replay(n_max: int, lambdas: Sequence[RationalLike] = NONZERO_LAMBDAS) -> VerificationReport:
    """Compare the derivation replay with direct argument scaling."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    values = _clean_lambdas(lambdas)
    if any(v == 0 for v in values):
        raise ValueError("lambda=0 invalid for replay")
    counterexample: Optional[Counterexample] = None
    for n in range(n_max + 1):
        for lam in values:
            replayed = replay_rodrigues_derivation(lam, n)
            target = scale_argument(legendre_bonnet(n), lam)
            if replayed != target:
                counterexample = _poly_mismatch(
                    {"n": n, "lambda": format_rational(lam), "check": "replay"}, replayed, target
                )
                break
        if counterexample:
            break
    return VerificationReport(
        subject="replay",
        n_range=(0, n_max),
        k_range=None,
        lambdas=values,
        passed=counterexample is None,
        counterexample=counterexample,
    )


def random_lambdas(
    count: int, seed: int, max_numerator: int = 9, max_denominator: int = 9
) -> Tuple[Fraction, ...]:
    """Seeded rational sample for sweep extension; reproducible across runs."""
    if count < 0:
        raise ValueError("count must be >= 0")
    rng = random.Random(seed)
    return tuple(
        Fraction(rng.randint(-max_numerator, max_numerator), rng.randint(1, max_denominator))
        for _ in range(count)
    )
