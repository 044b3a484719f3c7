"""Classes in N^1(C_n) = <theta, x> for a very general curve C, and slope bounds."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from secdiv.arith import binomial, factorial, inv_factorial
from secdiv.bn_counts import CountResult, InconsistencyError, secant_point_count
from secdiv.moduli_classes import c_0j, c_psi
from secdiv.params import (
    DEFAULT_LIMITS,
    EnumerationLimits,
    ParamError,
    SecantParams,
    enumerate_params,
    nonempty_condition,
    residual_params,
    validate,
)


@dataclass(frozen=True)
class NSClassCn:
    theta: Fraction
    x: Fraction
    g: int
    n: int

    @property
    def slope(self) -> Fraction:
        if self.theta == 0:
            raise ZeroDivisionError("slope undefined when the theta coefficient is zero")
        return -self.x / self.theta

    def __add__(self, other: "NSClassCn") -> "NSClassCn":
        return NSClassCn(self.theta + other.theta, self.x + other.x, self.g, self.n)

    def __mul__(self, c) -> "NSClassCn":
        return NSClassCn(self.theta * c, self.x * c, self.g, self.n)

    __rmul__ = __mul__

    def terms(self) -> list[tuple[str, Fraction]]:
        return [("theta", self.theta), ("x", self.x)]


def _displayed_coefficient(p: SecantParams) -> Fraction:
    # Coefficient of (theta - (g/n) x) exactly as the closed form on C_n is written.
    g, r, t, n, s = p.g, p.r, p.t, p.n, p.s
    num = factorial(g) * n
    for i in range(2, t + 1):
        num *= factorial(i) * (n - i) * inv_factorial(s - 1 + i)
    for j in range(2, r + 2 - t):
        num *= factorial(j) * factorial(n + j)
        num /= factorial(s + n - 1 + j) * factorial(n - t - 1 + j) * (n - 1 + j)
    return num / (g * factorial(s - 1) * factorial(s + n - 1) * factorial(t - 1) * factorial(r - t))


def _require_divisor(p: SecantParams) -> None:
    if not nonempty_condition(p):
        raise ParamError(f"{p} satisfies none of the nonemptiness conditions")


def secant_class_cn(p: SecantParams) -> NSClassCn:
    """Class of the secant divisor in C_n: count/(g(n^2-1)) * (theta - (g/n) x)."""
    _require_divisor(p)
    g, n = p.g, p.n
    count = secant_point_count(p).value
    coeff = count / (g * (n * n - 1))
    displayed = _displayed_coefficient(p)
    if displayed != coeff:
        raise InconsistencyError(f"class coefficient mismatch at {p}: {displayed} vs {coeff}")
    return NSClassCn(coeff, -coeff * Fraction(g, n), g, n)


def secant_class_cn_via_pullback(p: SecantParams) -> NSClassCn:
    """Same class, pulled back from the moduli class.

    Uses u^*(delta_{0:2}) = delta_C = -theta + (g+n-1) x and u^*(psi~) = (2g-2) x,
    where pi^*(psi~) = sum psi_i - sum_j j delta_{0:j}.
    """
    _require_divisor(p)
    g, n = p.g, p.n
    nu = secant_point_count(p).value / (g * (g * g - 1))
    cp, c02 = c_psi(g, n), c_0j(g, n, 2)
    theta = nu * (c02 - 2 * cp)
    x = nu * ((2 * g - 2) * cp - (g + n - 1) * (c02 - 2 * cp))
    return NSClassCn(theta, x, g, n)


def diagonal_class(g: int, n: int) -> NSClassCn:
    return NSClassCn(Fraction(-1), Fraction(g + n - 1), g, n)


def r1_class(g: int, d: int) -> NSClassCn:
    """The r = 1 case, (n/g) C(g, g-d) (theta - (g/n) x) with n = 2d - g."""
    n = 2 * d - g
    if n < 2:
        raise ParamError(f"need n = 2d - g >= 2, got {n}")
    coeff = Fraction(n, g) * binomial(g, g - d)
    return NSClassCn(coeff, -coeff * Fraction(g, n), g, n)


@dataclass(frozen=True)
class SlopeRow:
    n: int
    has_divisor: bool
    witnesses: tuple[SecantParams, ...]
    slope_new: Fraction
    slope_classical: int
    note: str = ""

    @property
    def strict_improvement(self) -> bool:
        return self.has_divisor and self.slope_new > self.slope_classical


def slope_table(
    g: int, n_range: Iterable[int], limits: EnumerationLimits = DEFAULT_LIMITS
) -> list[SlopeRow]:
    """Compare the slope g/n of the secant classes with the classical bound floor(g/n)."""
    if g < 2:
        raise ParamError("need g >= 2")
    rows = []
    for n in n_range:
        witnesses = tuple(enumerate_params(g, n, limits)) if n >= 2 else ()
        note = ""
        if not witnesses:
            if n == g - 1:
                note = "excluded: n = g-1 outside theorem hypotheses"
            else:
                note = "no secant divisor in range"
        rows.append(
            SlopeRow(
                n=n,
                has_divisor=bool(witnesses),
                witnesses=witnesses,
                slope_new=Fraction(g, n),
                slope_classical=g // n,
                note=note,
            )
        )
    return rows


@dataclass(frozen=True)
class ResidualComparison:
    params: SecantParams
    residual: tuple[int, int, int, int, int]
    residual_valid: bool
    count: CountResult
    residual_count: CountResult | None
    reason: str = ""

    @property
    def counts_agree(self) -> bool | None:
        if self.residual_count is None:
            return None
        return self.count.value == self.residual_count.value


def compare_residual(p: SecantParams) -> ResidualComparison:
    """Counts for a t = r tuple and its residual tuple; reported, never asserted."""
    res = residual_params(p)
    count = secant_point_count(p)
    try:
        q = validate(*res)
    except ParamError as exc:
        return ResidualComparison(p, res, False, count, None, str(exc))
    return ResidualComparison(p, res, True, count, secant_point_count(q))
