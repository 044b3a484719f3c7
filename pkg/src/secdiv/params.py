"""Parameter tuples (g, r, d, t, n) for secant divisors and their validity conditions."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

AUTO = "auto"


class ParamError(ValueError):
    """Base class for rejected parameter tuples."""


class RangeViolation(ParamError):
    pass


class CodimensionViolation(ParamError):
    pass


class NonPositiveS(ParamError):
    pass


def check_vanishing_sequence(a: Sequence[int], d: int | None = None) -> tuple[int, ...]:
    a = tuple(int(x) for x in a)
    if not a:
        raise ParamError("empty vanishing sequence")
    if a[0] < 0:
        raise ParamError(f"vanishing orders must be non-negative: {a}")
    if any(x >= y for x, y in zip(a, a[1:])):
        raise ParamError(f"vanishing sequence must be strictly increasing: {a}")
    if d is not None and a[-1] > d:
        raise ParamError(f"vanishing order {a[-1]} exceeds degree {d}")
    return a


def rho(g: int, r: int, d: int) -> int:
    return g - (r + 1) * (g - d + r)


def rho_pointed(g: int, r: int, d: int, a: Sequence[int]) -> int:
    if len(a) != r + 1:
        raise ParamError(f"vanishing sequence has {len(a)} entries, expected r+1 = {r + 1}")
    return rho(g, r, d) - sum(ai - i for i, ai in enumerate(a))


def secant_vanishing(r: int, t: int, n: int) -> tuple[int, ...]:
    """The sequence (0, ..., t-1, n, ..., n+r-t)."""
    return tuple(range(t)) + tuple(range(n, n + r - t + 1))


def codim_target(r: int, t: int, n: int) -> int:
    return (n - t) * (r + 1 - t) - 1


@dataclass(frozen=True, order=True)
class SecantParams:
    g: int
    r: int
    d: int
    t: int
    n: int
    s: int = field(init=False, compare=False)
    a: tuple[int, ...] = field(init=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "s", self.g - self.d + self.r)
        object.__setattr__(self, "a", secant_vanishing(self.r, self.t, self.n))

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.g, self.r, self.d, self.t, self.n)

    def __str__(self) -> str:
        return f"(g={self.g}, r={self.r}, d={self.d}, t={self.t}, n={self.n})"


def infer_degree(g: int, r: int, t: int, n: int) -> int:
    """Solve rho(g, r, d) = (n-t)(r+1-t) - 1 for d."""
    num = codim_target(r, t, n) - g
    if num % (r + 1):
        raise CodimensionViolation(
            f"no integral degree d satisfies the codimension condition for g={g}, r={r}, t={t}, n={n}"
        )
    return g + r + num // (r + 1)


def validate(g: int, r: int, d: int | str, t: int, n: int) -> SecantParams:
    """Check a tuple and return it as :class:`SecantParams`.

    ``d`` may be ``"auto"``, in which case it is solved from the codimension
    condition.
    """
    if r < 1:
        raise RangeViolation(f"r must be >= 1, got {r}")
    if not 1 <= t <= r:
        raise RangeViolation(f"need 1 <= t <= r, got t={t}, r={r}")
    if n < t + 1:
        raise RangeViolation(f"need n >= t+1, got n={n}, t={t}")
    if g < 2:
        raise RangeViolation(f"need g >= 2, got {g}")
    if d == AUTO:
        d = infer_degree(g, r, t, n)
    d = int(d)
    if d < 2:
        raise RangeViolation(f"need d >= 2, got {d}")
    target = codim_target(r, t, n)
    if rho(g, r, d) != target:
        raise CodimensionViolation(
            f"rho({g},{r},{d}) = {rho(g, r, d)} but (n-t)(r+1-t)-1 = {target}"
        )
    if g - d + r < 1:
        raise NonPositiveS(f"s = g-d+r = {g - d + r} must be >= 1")
    if n + r - t > d:
        raise RangeViolation(f"vanishing order n+r-t={n + r - t} exceeds d={d}")
    p = SecantParams(g, r, d, t, n)
    assert rho_pointed(g, r, d, p.a) == -1
    return p


def nonempty_condition(p: SecantParams) -> set[str]:
    """Labels of the known nonemptiness criteria satisfied by ``p``."""
    g, r, d, t, n, s = p.g, p.r, p.d, p.t, p.n, p.s
    k = (n - t) * (r + 1 - t)
    out = set()
    if s == 1 and n >= k:
        out.add("i")
    if s >= 1 and n >= k + r - t and d >= 2 * n - 1:
        out.add("ii")
    if s >= 1 and n <= k:
        out.add("iii")
    if s >= 1 and t == r:
        out.add("iv")
    return out


@dataclass(frozen=True)
class EnumerationLimits:
    r_max: int = 20
    d_max: int | None = None  # None means 4g

    def degree_cap(self, g: int) -> int:
        return 4 * g if self.d_max is None else self.d_max

    @classmethod
    def from_file(cls, path) -> "EnumerationLimits":
        """Read ``key=value`` lines (``r_max``, ``d_max``); ``#`` starts a comment."""
        values: dict[str, int] = {}
        with open(path, encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                key, sep, val = line.partition("=")
                key = key.strip()
                if not sep or key not in ("r_max", "d_max"):
                    raise ValueError(f"{path}:{lineno}: expected r_max=<int> or d_max=<int>")
                values[key] = int(val.strip())
        return cls(**values)


DEFAULT_LIMITS = EnumerationLimits()


def enumerate_params(
    g: int, n: int, limits: EnumerationLimits = DEFAULT_LIMITS
) -> list[SecantParams]:
    """All valid (r, t, d) for fixed (g, n) meeting some nonemptiness criterion."""
    found = []
    d_cap = limits.degree_cap(g)
    for r in range(1, limits.r_max + 1):
        for t in range(1, min(r, n - 1) + 1):
            try:
                p = validate(g, r, AUTO, t, n)
            except ParamError:
                continue
            if p.d <= d_cap and nonempty_condition(p):
                found.append(p)
    found.sort(key=lambda p: (p.r, p.t, p.d))
    return found


def iter_params(
    g_values: Iterable[int], n_values: Iterable[int], limits: EnumerationLimits = DEFAULT_LIMITS
):
    n_values = list(n_values)
    for g in g_values:
        for n in n_values:
            yield from enumerate_params(g, n, limits)


def residual_params(p: SecantParams) -> tuple[int, int, int, int, int]:
    """Residual tuple (g, g-d+n-1, 2g-2-d+n, n-r, n) for a tuple with t = r."""
    if p.t != p.r:
        raise ParamError(f"residuation needs t = r, got t={p.t}, r={p.r}")
    g, d, n, r = p.g, p.d, p.n, p.r
    return (g, g - d + n - 1, 2 * g - 2 - d + n, n - r, n)
