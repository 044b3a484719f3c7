"""Divisor classes on the moduli spaces of pointed stable curves.

Classes on M_{g,1} are stored over (lambda, psi, delta_irr, delta_1..delta_{g-1}).
Classes on M_{g,n} are stored over the S_n-symmetric basis: a single
coefficient for every psi_i, delta_irr, delta_{0:j} (j = 2..n) and
delta_{i:0} (i = 1..g-1). The coefficients of delta_{i:j} with i, j >= 1 are
not computed; they are carried as an explicit unknown marker.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from secdiv.arith import binomial
from secdiv.bn_counts import castelnuovo_count, pointed_secant_count, secant_point_count
from secdiv.params import ParamError, SecantParams, nonempty_condition


@dataclass(frozen=True)
class PicClassM_g1:
    genus: int
    lambda_: Fraction
    psi: Fraction
    delta_irr: Fraction
    delta_i: tuple[Fraction, ...]  # delta_1, ..., delta_{g-1}

    def __post_init__(self):
        if len(self.delta_i) != self.genus - 1:
            raise ValueError(f"expected {self.genus - 1} boundary coefficients delta_i")

    def __add__(self, other: "PicClassM_g1") -> "PicClassM_g1":
        if self.genus != other.genus:
            raise ValueError("genus mismatch")
        return PicClassM_g1(
            self.genus,
            self.lambda_ + other.lambda_,
            self.psi + other.psi,
            self.delta_irr + other.delta_irr,
            tuple(x + y for x, y in zip(self.delta_i, other.delta_i)),
        )

    def __mul__(self, c) -> "PicClassM_g1":
        c = Fraction(c)
        return PicClassM_g1(
            self.genus,
            self.lambda_ * c,
            self.psi * c,
            self.delta_irr * c,
            tuple(x * c for x in self.delta_i),
        )

    __rmul__ = __mul__

    def delta(self, i: int) -> Fraction:
        return self.delta_i[i - 1]

    def terms(self) -> list[tuple[str, Fraction]]:
        out = [("lambda", self.lambda_), ("psi", self.psi), ("delta_irr", self.delta_irr)]
        out += [(f"delta_{i}", c) for i, c in enumerate(self.delta_i, 1)]
        return out


class UnknownCoefficient(LookupError):
    """Raised when a computation needs a delta_{i:j} coefficient with i, j >= 1."""


@dataclass(frozen=True)
class PicClassM_gn:
    genus: int
    n: int
    lambda_: Fraction
    psi_each: Fraction
    delta_irr: Fraction
    delta_0j: dict[int, Fraction]
    delta_i0: dict[int, Fraction]
    unknown: str = "delta_{i:j} for i>=1, j>=1 not computed"

    def coefficient(self, i: int, j: int) -> Fraction:
        """Coefficient of delta_{i:j}."""
        if i == 0:
            return self.delta_0j[j]
        if j == 0:
            return self.delta_i0[i]
        raise UnknownCoefficient(f"coefficient of delta_{{{i}:{j}}} is not computed")

    def terms(self) -> list[tuple[str, Fraction]]:
        out = [("lambda", self.lambda_), ("psi", self.psi_each), ("delta_irr", self.delta_irr)]
        out += [(f"delta_0:{j}", c) for j, c in sorted(self.delta_0j.items())]
        out += [(f"delta_{i}:0", c) for i, c in sorted(self.delta_i0.items())]
        return out


def bn_class(g: int) -> PicClassM_g1:
    """Pull-back of the Brill-Noether divisor class from M_g."""
    return PicClassM_g1(
        g,
        Fraction(g + 3),
        Fraction(0),
        Fraction(-(g + 1), 6),
        tuple(Fraction(-i * (g - i)) for i in range(1, g)),
    )


def w_class(g: int) -> PicClassM_g1:
    """Closure of the Weierstrass divisor."""
    if g < 2:
        raise ParamError("the Weierstrass class needs g >= 2")
    return PicClassM_g1(
        g,
        Fraction(-1),
        binomial(g + 1, 2),
        Fraction(0),
        tuple(-binomial(g - i + 1, 2) for i in range(1, g)),
    )


@dataclass(frozen=True)
class PointedBNData:
    mu: Fraction
    nu: Fraction
    sigma: Fraction
    count: Fraction


def _shifted_sequences(a: tuple[int, ...]) -> list[tuple[int, ...]]:
    # (a_0+1-delta^i_0, ..., a_r+1-delta^i_r) for i = 0..r
    return [tuple(x + (0 if k == i else 1) for k, x in enumerate(a)) for i in range(len(a))]


def sigma_coeff(p: SecantParams) -> Fraction:
    g, d, r, t, n, s = p.g, p.d, p.r, p.t, p.n, p.s
    if g == 2:
        return Fraction(0)
    e = d - g - t + 1
    num = (t * e + g + 1) * (n - t) * ((n - t) * (3 * t * e - g - 1) + 2 * (g + 1) * (e - t))
    num -= (d + 1) * (g + 1) ** 2 * (d - 2 * g + 1)
    den = 2 * (g - 2) * s * (n + s) * t * (n - t) * (r + 1 - t) * (n + r + 1 - t)
    return Fraction(num, den)


def mu_nu(p: SecantParams) -> PointedBNData:
    """Coefficients of BN and W through the test-curve formula (shifted counts in genus g-1)."""
    g = p.g
    if g == 2:
        raise ParamError("the test-curve formula divides by C(g-1, 2), which vanishes at g = 2")
    count = secant_point_count(p).value
    nu = count / (g * (g * g - 1))
    shifted = Fraction(0)
    for b in _shifted_sequences(p.a):
        shifted += castelnuovo_count(g - 1, p.r, p.d, b).value
    mu = -count / (2 * (g * g - 1)) + shifted / (4 * binomial(g - 1, 2))
    return PointedBNData(mu=mu, nu=nu, sigma=sigma_coeff(p), count=count)


def pointed_bn_class(p: SecantParams) -> PicClassM_g1:
    """Class of the pointed Brill-Noether divisor with vanishing (0..t-1, n..n+r-t)."""
    count = secant_point_count(p).value
    nu = count / (p.g * (p.g**2 - 1))
    return nu * (sigma_coeff(p) * bn_class(p.g) + w_class(p.g))


@dataclass(frozen=True)
class SecantCoefficients:
    """The bracketed coefficients c_* of the secant divisor class, before scaling by nu."""

    nu: Fraction
    c_lambda: Fraction
    c_psi: Fraction
    c_irr: Fraction
    c_0j: dict[int, Fraction]
    c_i0: dict[int, Fraction] = field(default_factory=dict)


def c_psi(g: int, n: int) -> Fraction:
    return Fraction((g + 1) * (g + n), 2 * n * (n + 1))


def c_0j(g: int, n: int, j: int) -> Fraction:
    return Fraction(j * (g + 1) * (n * n + j * g * n - j * n - g), 2 * n * (n * n - 1))


def secant_coefficients(p: SecantParams) -> SecantCoefficients:
    g, n = p.g, p.n
    sigma = sigma_coeff(p)
    count = secant_point_count(p).value
    return SecantCoefficients(
        nu=count / (g * (g * g - 1)),
        c_lambda=sigma * (g + 3) - 1,
        c_psi=c_psi(g, n),
        c_irr=sigma * Fraction(g + 1, 6),
        c_0j={j: c_0j(g, n, j) for j in range(2, n + 1)},
        c_i0={i: sigma * i * (g - i) + Fraction(i * (i + 1), 2) for i in range(1, g)},
    )


def secant_class_mgn(p: SecantParams) -> PicClassM_gn:
    """Class of the closure of the secant divisor in M_{g,n} (computed coefficients only)."""
    if not nonempty_condition(p):
        raise ParamError(f"{p} satisfies none of the nonemptiness conditions")
    c = secant_coefficients(p)
    return PicClassM_gn(
        genus=p.g,
        n=p.n,
        lambda_=c.nu * c.c_lambda,
        psi_each=c.nu * c.c_psi,
        delta_irr=-c.nu * c.c_irr,
        delta_0j={j: -c.nu * v for j, v in c.c_0j.items()},
        delta_i0={i: -c.nu * v for i, v in c.c_i0.items()},
    )


def psi_from_two_point_system(p: SecantParams) -> tuple[Fraction, Fraction]:
    """Solve the two test-curve relations on M_{g,2} for (h_x, h_y).

    Uses h_{0:{x,y}} = C(g+1, 2) and T(1), T(n-1) from the counting formula.
    """
    g, n = p.g, p.n
    nu = secant_point_count(p).value / (g * (g * g - 1))
    h0 = binomial(g + 1, 2)
    rhs_x = pointed_secant_count(p, 1).value / nu + h0
    rhs_y = pointed_secant_count(p, n - 1).value / nu + h0
    # (2g-1) h_x + h_y = rhs_x ;  h_x + (2g-1) h_y = rhs_y
    a = 2 * g - 1
    det = a * a - 1
    h_x = (a * rhs_x - rhs_y) / det
    h_y = (a * rhs_y - rhs_x) / det
    return h_x, h_y
