"""Closed-form counts of linear series with prescribed vanishing at a point."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from secdiv.arith import factorial, inv_factorial
from secdiv.params import ParamError, SecantParams, rho_pointed


@dataclass(frozen=True)
class CountResult:
    value: Fraction
    params: tuple
    formula_tag: str  # general_sum | product_special | interpolation

    def __int__(self) -> int:
        return int(self.value)

    def __eq__(self, other):
        if isinstance(other, CountResult):
            return self.value == other.value
        return self.value == other

    def __hash__(self):
        return hash(self.value)


def _general_sum(g: int, r: int, d: int, a: Sequence[int]) -> Fraction:
    s = g - d + r
    total = Fraction(0)
    for j1, j2 in combinations(range(r + 1), 2):
        b = list(a)
        b[j1] -= 1
        b[j2] -= 1
        weight = (a[j2] - a[j1]) ** 2 - 1
        if weight == 0:
            continue
        prod = 1
        for i, k in combinations(range(r + 1), 2):
            prod *= b[k] - b[i]
            if prod == 0:
                break
        if prod == 0:
            continue
        denom = Fraction(1)
        for bi in b:
            denom *= inv_factorial(s + bi)
        total += weight * prod * denom
    return factorial(g) * total


def castelnuovo_count(g: int, r: int, d: int, a: Sequence[int]) -> CountResult:
    """Number of pairs (x, l) in C x G^r_d(C) with vanishing sequence ``a`` at x.

    ``a`` must satisfy ``rho(g, r, d, a) = -1``. Sequences with repeated
    entries are accepted and give 0 (the difference factors vanish).
    """
    a = tuple(int(x) for x in a)
    if rho_pointed(g, r, d, a) != -1:
        raise ParamError(f"rho({g},{r},{d},{a}) = {rho_pointed(g, r, d, a)}, expected -1")
    return CountResult(_general_sum(g, r, d, a), (g, r, d, a), "general_sum")


def _product_formula(p: SecantParams) -> Fraction:
    g, r, t, n, s = p.g, p.r, p.t, p.n, p.s
    value = factorial(g) * n * (n * n - 1)
    for i in range(2, t + 1):
        value *= factorial(i) * (n - i) * inv_factorial(s - 1 + i)
    for j in range(2, r + 2 - t):
        value *= factorial(j) * factorial(n + j)
        value /= factorial(s + n - 1 + j) * factorial(n - t - 1 + j) * (n - 1 + j)
    return value / (factorial(s - 1) * factorial(s + n - 1) * factorial(t - 1) * factorial(r - t))


def secant_point_count(p: SecantParams) -> CountResult:
    """Number of (x, l) with h^0(l(-n x)) >= r+1-t, via the product formula."""
    return CountResult(_product_formula(p), p.as_tuple(), "product_special")


def pointed_secant_count(p: SecantParams, delta: int) -> CountResult:
    """T(delta): pairs (x, l) with h^0(l(-delta x - (n-delta) p)) >= r+1-t.

    ``delta = 0`` is admitted and returns 0.
    """
    if not 0 <= delta <= p.n:
        raise ParamError(f"delta must lie in [0, n={p.n}], got {delta}")
    n = p.n
    value = _product_formula(p) * Fraction(delta * (n * delta - 1), n * (n * n - 1))
    return CountResult(value, p.as_tuple() + (delta,), "interpolation")


class InconsistencyError(ArithmeticError):
    """Two independent evaluations of the same quantity disagree."""


def _det(matrix: list[list[Fraction]]) -> Fraction:
    # Gaussian elimination over Q; only used for small scalar matrices.
    m = [row[:] for row in matrix]
    size = len(m)
    det = Fraction(1)
    for col in range(size):
        pivot = next((i for i in range(col, size) if m[i][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for i in range(col + 1, size):
            f = m[i][col] / m[col][col]
            if f:
                for j in range(col, size):
                    m[i][j] -= f * m[col][j]
    return det


def vandermonde_delta(b: Sequence[int]) -> Fraction:
    """prod_{i<j}(b_j - b_i) / prod_k b_k!, cross-checked against its determinant form.

    The determinant has rows (from the bottom) b_0, ..., b_r and entries
    ``1/(b_i - r + j)!`` in column j.
    """
    b = [int(x) for x in b]
    if any(x < 0 for x in b):
        raise ValueError(f"entries must be non-negative: {b}")
    r = len(b) - 1
    closed = Fraction(1)
    for i, j in combinations(range(r + 1), 2):
        closed *= b[j] - b[i]
    for x in b:
        closed *= inv_factorial(x)
    rows = [[inv_factorial(bi - r + j) for j in range(r + 1)] for bi in reversed(b)]
    det = _det(rows)
    if det != closed:
        raise InconsistencyError(f"Vandermonde variant mismatch at {b}: {closed} vs {det}")
    return closed
