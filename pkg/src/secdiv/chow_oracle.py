"""Symbolic intersection theory on C x Pic and C x C x Pic.

This module recomputes the pointed counts T(delta) from scratch: it builds
the Chern character of the relevant sheaf on the triple product, pushes it
forward to C x Pic, converts to Chern classes and evaluates the flag-bundle
determinant. None of the closed-form counting formulas are used here.

Two-factor ring (C x Pic, genus g). Generators eta (point on C), gamma and
theta, with

    eta^2 = eta*gamma = 0,   gamma^2 = -2*eta*theta,   theta^(g+1) = 0.

Three-factor ring (C x C x Pic). Generators eta1, eta2, g12, g13, g23 and
theta with

    eta_i^2 = 0,  eta1*g12 = eta2*g12 = eta1*g13 = eta2*g23 = 0,
    g12^2 = -2g*eta1*eta2,  g13^2 = -2*eta1*theta,  g23^2 = -2*eta2*theta,
    g12*g23 = eta2*g13,  g12*g13 = eta1*g23,  theta^(g+1) = 0.

The product g13*g23 is not determined by these relations and raises
:class:`UnreducibleMonomial`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from secdiv.arith import factorial, inv_factorial
from secdiv.params import ParamError, SecantParams


def _trim(coeffs: Iterable, size: int) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs][:size]
    out.extend([Fraction(0)] * (size - len(out)))
    return tuple(out)


def _polymul(p: Sequence[Fraction], q: Sequence[Fraction], size: int) -> list[Fraction]:
    out = [Fraction(0)] * size
    for i, a in enumerate(p):
        if not a:
            continue
        for j in range(min(len(q), size - i)):
            if q[j]:
                out[i + j] += a * q[j]
    return out


class RingElement2:
    """A(theta) + eta*B(theta) + gamma*C(theta) on C x Pic, truncated at theta^g."""

    __slots__ = ("genus", "a", "b", "c")

    def __init__(self, genus: int, a=(), b=(), c=()):
        self.genus = genus
        size = genus + 1
        self.a = _trim(a, size)
        self.b = _trim(b, size)
        self.c = _trim(c, size)

    @classmethod
    def scalar(cls, genus: int, value) -> "RingElement2":
        return cls(genus, a=[value])

    @classmethod
    def theta_power(cls, genus: int, k: int, coeff=1) -> "RingElement2":
        if k < 0 or k > genus:
            return cls(genus)
        return cls(genus, a=[0] * k + [coeff])

    @classmethod
    def eta(cls, genus: int, k: int = 0, coeff=1) -> "RingElement2":
        """coeff * eta * theta^k."""
        if k < 0 or k > genus:
            return cls(genus)
        return cls(genus, b=[0] * k + [coeff])

    @classmethod
    def gamma(cls, genus: int, k: int = 0, coeff=1) -> "RingElement2":
        """coeff * gamma * theta^k."""
        if k < 0 or k > genus:
            return cls(genus)
        return cls(genus, c=[0] * k + [coeff])

    def _coerce(self, other) -> "RingElement2":
        if isinstance(other, RingElement2):
            if other.genus != self.genus:
                raise ValueError("genus mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return RingElement2.scalar(self.genus, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingElement2(
            self.genus,
            [x + y for x, y in zip(self.a, other.a)],
            [x + y for x, y in zip(self.b, other.b)],
            [x + y for x, y in zip(self.c, other.c)],
        )

    __radd__ = __add__

    def __neg__(self):
        return RingElement2(
            self.genus, [-x for x in self.a], [-x for x in self.b], [-x for x in self.c]
        )

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RingElement2(
                self.genus,
                [x * other for x in self.a],
                [x * other for x in self.b],
                [x * other for x in self.c],
            )
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        size = self.genus + 1
        a = _polymul(self.a, other.a, size)
        b = [
            x + y
            for x, y in zip(_polymul(self.a, other.b, size), _polymul(other.a, self.b, size))
        ]
        # gamma*gamma = -2 eta theta
        cc = _polymul(self.c, other.c, size)
        for k in range(size - 1, -1, -1):
            b[k] -= 2 * (cc[k - 1] if k else 0)
        c = [
            x + y
            for x, y in zip(_polymul(self.a, other.c, size), _polymul(other.a, self.c, size))
        ]
        return RingElement2(self.genus, a, b, c)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RingElement2.scalar(self.genus, other)
        if not isinstance(other, RingElement2):
            return NotImplemented
        return (self.genus, self.a, self.b, self.c) == (other.genus, other.a, other.b, other.c)

    def __hash__(self):
        return hash((self.genus, self.a, self.b, self.c))

    def is_zero(self) -> bool:
        return not any(self.a) and not any(self.b) and not any(self.c)

    def constant(self) -> Fraction:
        return self.a[0]

    def homogeneous(self, k: int) -> "RingElement2":
        """Degree-k part, where eta, gamma and theta all have degree one."""
        out = RingElement2(self.genus)
        if k < 0:
            return out
        a = [0] * (self.genus + 1)
        b = [0] * (self.genus + 1)
        c = [0] * (self.genus + 1)
        if k <= self.genus:
            a[k] = self.a[k]
        if 1 <= k <= self.genus + 1:
            b[k - 1] = self.b[k - 1]
            c[k - 1] = self.c[k - 1]
        return RingElement2(self.genus, a, b, c)

    def top_degree(self) -> int:
        return self.genus + 1

    def degree(self) -> Fraction:
        """Integral over C x Pic: deg(eta theta^g) = g!, deg(gamma theta^g) = 0."""
        return self.b[self.genus] * factorial(self.genus)

    def __repr__(self) -> str:
        terms = []
        for name, coeffs in (("", self.a), ("eta", self.b), ("gamma", self.c)):
            for k, v in enumerate(coeffs):
                if v:
                    mono = "*".join(x for x in (name, f"theta^{k}" if k else "") if x) or "1"
                    terms.append(f"{v}*{mono}")
        return " + ".join(terms) or "0"


def exp_theta(genus: int, sign: int = 1) -> RingElement2:
    """e^(sign*theta)."""
    return RingElement2(genus, a=[Fraction(sign**k) * inv_factorial(k) for k in range(genus + 1)])


# --- three-factor ring -------------------------------------------------------

ETA1, ETA2, G12, G13, G23 = range(5)
GENERATOR_NAMES = ("eta1", "eta2", "g12", "g13", "g23")
THETA = "theta"


class UnreducibleMonomial(ArithmeticError):
    """The product g13*g23 appeared; the relations do not reduce it."""


# A monomial is (bits, f): bits a 5-tuple of 0/1 over GENERATOR_NAMES, f the theta power.
Monomial = tuple[tuple[int, ...], int]


def _with(bits: tuple[int, ...], gen: int, on: int) -> tuple[int, ...]:
    out = list(bits)
    out[gen] = on
    return tuple(out)


def _mul_generator(bits: tuple[int, ...], f: int, gen, genus: int) -> dict[Monomial, Fraction]:
    """Multiply the normal-form monomial (bits, f) by one generator."""
    if gen == THETA:
        return {} if f + 1 > genus else {(bits, f + 1): Fraction(1)}
    has = lambda i: bits[i] == 1  # noqa: E731
    if gen == ETA1:
        if has(ETA1) or has(G12) or has(G13):
            return {}
        return {(_with(bits, ETA1, 1), f): Fraction(1)}
    if gen == ETA2:
        if has(ETA2) or has(G12) or has(G23):
            return {}
        return {(_with(bits, ETA2, 1), f): Fraction(1)}
    if gen == G12:
        if has(ETA1) or has(ETA2):
            return {}
        if has(G12):
            return _mul_word(_with(bits, G12, 0), f, (ETA1, ETA2), genus, Fraction(-2 * genus))
        if has(G23):
            return _mul_word(_with(bits, G23, 0), f, (ETA2, G13), genus)
        if has(G13):
            return _mul_word(_with(bits, G13, 0), f, (ETA1, G23), genus)
        return {(_with(bits, G12, 1), f): Fraction(1)}
    if gen == G13:
        if has(ETA1):
            return {}
        if has(G13):
            return _mul_word(_with(bits, G13, 0), f, (ETA1, THETA), genus, Fraction(-2))
        if has(G12):
            return _mul_word(_with(bits, G12, 0), f, (ETA1, G23), genus)
        if has(G23):
            raise UnreducibleMonomial("g13*g23")
        return {(_with(bits, G13, 1), f): Fraction(1)}
    if gen == G23:
        if has(ETA2):
            return {}
        if has(G23):
            return _mul_word(_with(bits, G23, 0), f, (ETA2, THETA), genus, Fraction(-2))
        if has(G12):
            return _mul_word(_with(bits, G12, 0), f, (ETA2, G13), genus)
        if has(G13):
            raise UnreducibleMonomial("g13*g23")
        return {(_with(bits, G23, 1), f): Fraction(1)}
    raise ValueError(f"unknown generator {gen!r}")


def _mul_word(bits, f, word, genus, coeff=Fraction(1)) -> dict[Monomial, Fraction]:
    terms: dict[Monomial, Fraction] = {(bits, f): coeff}
    for gen in word:
        nxt: dict[Monomial, Fraction] = {}
        for (b, e), c in terms.items():
            for mono, c2 in _mul_generator(b, e, gen, genus).items():
                nxt[mono] = nxt.get(mono, Fraction(0)) + c * c2
        terms = {k: v for k, v in nxt.items() if v}
    return terms


def monomial_word(mono: Monomial) -> tuple:
    bits, f = mono
    return tuple(i for i in range(5) if bits[i]) + (THETA,) * f


class RingElement3:
    """Sparse element of the truncated ring of C x C x Pic."""

    __slots__ = ("genus", "terms")

    def __init__(self, genus: int, terms: dict[Monomial, Fraction] | None = None):
        self.genus = genus
        self.terms = {k: Fraction(v) for k, v in (terms or {}).items() if v}

    ONE_BITS = (0, 0, 0, 0, 0)

    @classmethod
    def scalar(cls, genus: int, value) -> "RingElement3":
        return cls(genus, {(cls.ONE_BITS, 0): Fraction(value)})

    @classmethod
    def generator(cls, genus: int, gen, coeff=1) -> "RingElement3":
        if gen == THETA:
            return cls(genus, {(cls.ONE_BITS, 1): Fraction(coeff)}) if genus >= 1 else cls(genus)
        return cls(genus, {(_with(cls.ONE_BITS, gen, 1), 0): Fraction(coeff)})

    def _coerce(self, other):
        if isinstance(other, RingElement3):
            if other.genus != self.genus:
                raise ValueError("genus mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return RingElement3.scalar(self.genus, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return RingElement3(self.genus, out)

    __radd__ = __add__

    def __neg__(self):
        return RingElement3(self.genus, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RingElement3(self.genus, {k: v * other for k, v in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, Fraction] = {}
        for (bits, f), c in self.terms.items():
            for mono2, c2 in other.terms.items():
                for mono, c3 in _mul_word(bits, f, monomial_word(mono2), self.genus).items():
                    out[mono] = out.get(mono, Fraction(0)) + c * c2 * c3
        return RingElement3(self.genus, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RingElement3.scalar(self.genus, other)
        if not isinstance(other, RingElement3):
            return NotImplemented
        return self.genus == other.genus and self.terms == other.terms

    def __hash__(self):
        return hash((self.genus, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def constant(self) -> Fraction:
        return self.terms.get((self.ONE_BITS, 0), Fraction(0))

    def coefficient(self, word: Sequence) -> Fraction:
        bits = [0] * 5
        f = 0
        for gen in word:
            if gen == THETA:
                f += 1
            else:
                bits[gen] = 1
        return self.terms.get((tuple(bits), f), Fraction(0))

    def __repr__(self) -> str:
        parts = []
        for (bits, f), c in sorted(self.terms.items()):
            names = [GENERATOR_NAMES[i] for i in range(5) if bits[i]]
            if f:
                names.append(f"theta^{f}")
            parts.append(f"{c}*{'*'.join(names) or '1'}")
        return " + ".join(parts) or "0"


def exp_neg(x: RingElement3) -> RingElement3:
    """e^(-x) for nilpotent x, as the finite sum of (-x)^k / k!."""
    if x.constant() != 0:
        raise ValueError("exp_neg needs a nilpotent argument (zero constant term)")
    total = RingElement3.scalar(x.genus, 1)
    power = RingElement3.scalar(x.genus, 1)
    k = 0
    while True:
        k += 1
        power = power * (-x)
        if power.is_zero():
            return total
        total = total + power * inv_factorial(k)


def default_twist(g: int, d: int) -> int:
    return max(0, 2 * g - 1 - d)


def sheaf_ch_M1(g: int, d: int, m: int, n: int, delta: int) -> RingElement3:
    """ch(nu^*L) * (1 - e^{-(delta*eta1 + delta*g12 + (m+n)*eta2)}) on C x C x Pic^{d+m}."""
    if m < 2 * g - 1 - d:
        raise ParamError(f"twist m={m} is below 2g-1-d={2 * g - 1 - d}")
    gen = lambda name, c=1: RingElement3.generator(g, name, c)  # noqa: E731
    ch_line = 1 + gen(ETA2, d + m) + gen(G23) - gen(ETA2) * gen(THETA)
    divisor = gen(ETA1, delta) + gen(G12, delta) + gen(ETA2, m + n)
    return ch_line * (1 - exp_neg(divisor))


def grr_pushforward(x: RingElement3, g: int | None = None) -> RingElement2:
    """Push forward along the second curve factor after the Todd factor 1 + (1-g)eta2."""
    g = x.genus if g is None else g
    todd = 1 + RingElement3.generator(x.genus, ETA2, 1 - g)
    y = x * todd
    a = [Fraction(0)] * (g + 1)
    b = [Fraction(0)] * (g + 1)
    c = [Fraction(0)] * (g + 1)
    for (bits, f), coeff in y.terms.items():
        if not bits[ETA2]:
            continue  # fibre degree < 1 integrates to zero
        rest = _with(bits, ETA2, 0)
        if rest == (0, 0, 0, 0, 0):
            a[f] += coeff
        elif rest == _with(RingElement3.ONE_BITS, ETA1, 1):
            b[f] += coeff
        elif rest == _with(RingElement3.ONE_BITS, G13, 1):
            c[f] += coeff
        else:  # pragma: no cover - excluded by the normal form
            raise UnreducibleMonomial(f"unexpected monomial {bits} after pushforward")
    return RingElement2(g, a, b, c)


@dataclass(frozen=True)
class ChernData:
    """Graded pieces of a Chern character (``kind='ch'``) or total Chern class (``kind='c'``)."""

    rank: Fraction
    components: tuple[RingElement2, ...]
    kind: str = "ch"

    @classmethod
    def from_total(cls, x: RingElement2, kind: str = "ch") -> "ChernData":
        comps = tuple(x.homogeneous(k) for k in range(x.top_degree() + 1))
        return cls(x.constant(), comps, kind)

    def total(self) -> RingElement2:
        out = self.components[0] * 0
        for comp in self.components:
            out = out + comp
        return out


def chern_classes_from_ch(ch: ChernData) -> ChernData:
    """Newton's identities: p_k = k! ch_k, k c_k = sum_i (-1)^(i-1) c_(k-i) p_i."""
    if ch.kind != "ch":
        raise ValueError("expected a Chern character")
    genus = ch.components[0].genus
    top = len(ch.components) - 1
    power_sums = [None] + [ch.components[k] * factorial(k) for k in range(1, top + 1)]
    classes = [RingElement2.scalar(genus, 1)]
    for k in range(1, top + 1):
        acc = RingElement2(genus)
        for i in range(1, k + 1):
            term = classes[k - i] * power_sums[i]
            acc = acc + term if i % 2 else acc - term
        classes.append(acc * Fraction(1, k))
    return ChernData(ch.rank, tuple(classes), "c")


def ch_from_chern_classes(c: ChernData) -> ChernData:
    """Inverse of :func:`chern_classes_from_ch`."""
    if c.kind != "c":
        raise ValueError("expected Chern classes")
    genus = c.components[0].genus
    top = len(c.components) - 1
    power_sums: list = [None]
    for k in range(1, top + 1):
        acc = c.components[k] * k
        for i in range(1, k):
            term = c.components[k - i] * power_sums[i]
            acc = acc - term if i % 2 else acc + term
        power_sums.append(acc if k % 2 else -acc)
    comps = [RingElement2.scalar(genus, c.rank)]
    comps += [power_sums[k] * inv_factorial(k) for k in range(1, top + 1)]
    return ChernData(c.rank, tuple(comps), "ch")


@lru_cache(maxsize=256)
def chern_M1(g: int, d: int, n: int, delta: int, m: int | None = None) -> RingElement2:
    """Total Chern class of M1, computed through the GRR pipeline."""
    m = default_twist(g, d) if m is None else m
    ch = grr_pushforward(sheaf_ch_M1(g, d, m, n, delta), g)
    return chern_classes_from_ch(ChernData.from_total(ch)).total()


@lru_cache(maxsize=256)
def _c1_total(g: int, d: int, n: int, delta: int, m: int | None) -> RingElement2:
    return chern_M1(g, d, n, delta, m) * exp_theta(g)


def difference_chern(
    j: int, which: int, g: int, d: int, n: int, delta: int, m: int | None = None
) -> RingElement2:
    """c_j(M0 - E) for ``which=0``, c_j(M1 - E) for ``which=1``."""
    if j < 0:
        return RingElement2(g)
    if which == 0:
        return RingElement2.theta_power(g, j, inv_factorial(j))
    if which != 1:
        raise ValueError("which must be 0 or 1")
    return _c1_total(g, d, n, delta, m).homogeneous(j)


def c1_closed_form(j: int, g: int, d: int, n: int, delta: int) -> RingElement2:
    """The printed closed form of c_j(M1 - E), for comparison with :func:`difference_chern`."""
    if j < 0:
        return RingElement2(g)
    lin = g * delta**2 + delta * (d - g + 1 - n)
    quad = delta - delta**2
    out = RingElement2.theta_power(g, j, inv_factorial(j))
    if j >= 1:
        eta_coeff = lin * inv_factorial(j - 1) + quad * inv_factorial(j - 2)
        out = out + RingElement2.eta(g, j - 1, eta_coeff)
        out = out + RingElement2.gamma(g, j - 1, delta * inv_factorial(j - 1))
    return out


def determinant(matrix: Sequence[Sequence]) -> object:
    """Division-free determinant by Laplace expansion with memoised minors."""
    size = len(matrix)
    if size == 0:
        raise ValueError("empty matrix")
    memo: dict[tuple[int, int], object] = {}

    def minor(row: int, free: int):
        # free: bitmask of columns still available for rows row..size-1
        if row == size:
            return 1
        key = (row, free)
        if key in memo:
            return memo[key]
        acc = None
        sign = 1
        for col in range(size):
            if not free >> col & 1:
                continue
            entry = matrix[row][col]
            term = entry * minor(row + 1, free & ~(1 << col))
            if sign < 0:
                term = -term
            acc = term if acc is None else acc + term
            sign = -sign
        memo[key] = acc
        return acc

    return minor(0, (1 << size) - 1)


def fulton_pragacz_matrix(
    p: SecantParams, delta: int, m: int | None = None, closed_form: bool = False
) -> list[list[RingElement2]]:
    g, d, r, t, n = p.g, p.d, p.r, p.t, p.n

    def c1(j):
        if closed_form:
            return c1_closed_form(j, g, d, n, delta)
        return difference_chern(j, 1, g, d, n, delta, m)

    rows = []
    for k in range(r - t, -1, -1):
        start = g - d + n + k
        rows.append([c1(start + col) for col in range(r + 1)])
    for k in range(t - 1, -1, -1):
        start = g - d + k
        rows.append([difference_chern(start + col, 0, g, d, n, delta) for col in range(r + 1)])
    return rows


def fulton_pragacz_T(
    p: SecantParams, delta: int, m: int | None = None, closed_form: bool = False
) -> Fraction:
    """Degree of the determinantal class; equals T(delta) when everything is consistent."""
    if not 0 <= delta <= p.n:
        raise ParamError(f"delta must lie in [0, n={p.n}], got {delta}")
    m = default_twist(p.g, p.d) if m is None else m
    det = determinant(fulton_pragacz_matrix(p, delta, m, closed_form))
    if isinstance(det, int):  # pragma: no cover - size >= 1 always gives a ring element
        return Fraction(0)
    return det.degree()
