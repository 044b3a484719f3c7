"""Cross-validation suites behind ``secdiv verify``.

Every suite compares two independent routes to the same number and reports
the first counterexample it finds.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Iterator

from secdiv import bn_counts, chow_oracle, moduli_classes, params, symprod
from secdiv.chow_oracle import ETA1, ETA2, G12, G13, G23, THETA, RingElement2, RingElement3


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checked: int
    counterexample: str | None = None
    seconds: float = 0.0


class _Fail(Exception):
    pass


def _check(cond: bool, what) -> None:
    if not cond:
        raise _Fail(str(what))


def valid_tuples(g_values, r_max: int, n_max: int | None = None) -> Iterator[params.SecantParams]:
    """Every tuple accepted by ``validate`` in the given box (d solved from the other entries)."""
    for g in g_values:
        for r in range(1, r_max + 1):
            for t in range(1, r + 1):
                # rho <= g bounds n - t by g + 1
                top = t + g + 1 if n_max is None else n_max
                for n in range(t + 1, top + 1):
                    try:
                        yield params.validate(g, r, params.AUTO, t, n)
                    except params.ParamError:
                        continue


def enumerated(g_values, n_max: int | None = None, limits=params.DEFAULT_LIMITS):
    for g in g_values:
        top = g + limits.r_max + 1 if n_max is None else n_max
        for n in range(2, top + 1):
            yield from params.enumerate_params(g, n, limits)


# --- individual suites; each returns the number of checks performed ---------


def suite_golden() -> int:
    checks = [
        (bn_counts.castelnuovo_count(3, 1, 3, (0, 3)).value, 24),
        (bn_counts.castelnuovo_count(6, 2, 6, (0, 1, 3)).value, 240),
        (bn_counts.pointed_secant_count(params.validate(6, 2, 6, 2, 3), 1).value, 20),
    ]
    c = symprod.secant_class_cn(params.validate(6, 2, 6, 2, 3))
    checks.append(((c.theta, c.x), (5, -10)))
    c = symprod.secant_class_cn(params.validate(4, 1, 3, 1, 2))
    checks.append(((c.theta, c.x), (2, -4)))
    for i, (got, want) in enumerate(checks):
        _check(got == want, f"golden #{i}: got {got}, expected {want}")
    return len(checks)


def suite_params(g_values) -> int:
    k = 0
    for p in valid_tuples(g_values, 4):
        rho = params.rho(p.g, p.r, p.d)
        _check(params.rho_pointed(p.g, p.r, p.d, p.a) == -1, p)
        _check(p.g == (p.r + 1) * p.s + rho, f"g identity at {p}")
        _check(p.d == (p.s + 1) * p.r + rho, f"d identity at {p}")
        if p.t == p.r:
            g2, r2, d2, t2, n2 = params.residual_params(p)
            _check(params.rho(g2, r2, d2) == (n2 - t2) * (r2 + 1 - t2) - 1, f"residual of {p}")
        k += 1
    return k


def suite_formula_crossval(g_values, r_max: int, n_max: int) -> int:
    k = 0
    for p in valid_tuples(g_values, r_max, n_max):
        prod = bn_counts.secant_point_count(p).value
        total = bn_counts.castelnuovo_count(p.g, p.r, p.d, p.a).value
        _check(prod == total, f"{p}: product {prod} != sum {total}")
        _check(prod.denominator == 1 and prod >= 0, f"{p}: count {prod} not a non-negative integer")
        k += 1
    return k


def suite_t_endpoints(g_values) -> int:
    k = 0
    for p in enumerated(g_values):
        count = bn_counts.secant_point_count(p).value
        T = lambda dl: bn_counts.pointed_secant_count(p, dl).value  # noqa: E731
        _check(T(0) == 0, f"T(0) at {p}")
        _check(T(p.n) == count, f"T(n) at {p}")
        _check(T(1) == count / (p.n * (p.n + 1)), f"T(1) at {p}")
        k += 1
    return k


def suite_weierstrass(g_max_count: int = 20, g_max_class: int = 15) -> int:
    k = 0
    for g in range(2, g_max_count + 1):
        v = bn_counts.castelnuovo_count(g, 1, g, (0, g)).value
        _check(v == g**3 - g, f"Weierstrass count at g={g}: {v}")
        k += 1
    for g in range(3, g_max_class + 1):
        p = params.validate(g, 1, g, 1, g)
        _check(moduli_classes.pointed_bn_class(p) == moduli_classes.w_class(g), f"W class at g={g}")
        k += 1
    return k


def _fits_quadratic(values: list[Fraction]) -> bool:
    # Lagrange through delta = 0, 1, 2, then compare the rest.
    y0, y1, y2 = values[:3]
    for x, y in enumerate(values):
        pred = y0 * Fraction((x - 1) * (x - 2), 2) - y1 * x * (x - 2) + y2 * Fraction(x * (x - 1), 2)
        if pred != y:
            return False
    return True


def suite_fulton_pragacz(g_values, r_max: int) -> int:
    k = 0
    for p in valid_tuples(g_values, r_max):
        samples = []
        for delta in range(p.n + 1):
            oracle = chow_oracle.fulton_pragacz_T(p, delta)
            formula = bn_counts.pointed_secant_count(p, delta).value
            _check(oracle == formula, f"{p}, delta={delta}: determinant {oracle} != formula {formula}")
            samples.append(oracle)
            k += 1
        _check(_fits_quadratic(samples), f"{p}: T(delta) samples not quadratic")
    return k


def printed_ch_M1(g, d, m, n, delta) -> RingElement2:
    lin = g * delta**2 + delta * (d - g + 1 - n)
    return (
        RingElement2.scalar(g, m + n)
        + RingElement2.eta(g, 0, lin)
        + RingElement2.gamma(g, 0, delta)
        - RingElement2.eta(g, 1, delta)
    )


def printed_c_M1(g, d, n, delta) -> RingElement2:
    lin = g * delta**2 + delta * (d - g + 1 - n)
    return (
        RingElement2.scalar(g, 1)
        + RingElement2.eta(g, 0, lin)
        + RingElement2.gamma(g, 0, delta)
        + RingElement2.eta(g, 1, delta - delta**2)
    )


def random_grr_inputs(rng: random.Random, count: int, g_max: int = 10):
    for _ in range(count):
        g = rng.randint(1, g_max)
        d = rng.randint(0, 2 * g + 2)
        m = max(0, 2 * g - 1 - d) + rng.randint(0, 3)
        n = rng.randint(1, 8)
        delta = rng.randint(0, n)
        yield g, d, m, n, delta


def suite_grr(rng: random.Random, count: int = 20) -> int:
    k = 0
    for g, d, m, n, delta in random_grr_inputs(rng, count):
        ch = chow_oracle.grr_pushforward(chow_oracle.sheaf_ch_M1(g, d, m, n, delta), g)
        _check(ch == printed_ch_M1(g, d, m, n, delta), f"ch(M1) at {(g, d, m, n, delta)}: {ch}")
        c = chow_oracle.chern_classes_from_ch(chow_oracle.ChernData.from_total(ch)).total()
        _check(c == printed_c_M1(g, d, n, delta), f"c(M1) at {(g, d, m, n, delta)}: {c}")
        for j in range(g + 3):
            got = chow_oracle.difference_chern(j, 1, g, d, n, delta, m)
            _check(got == chow_oracle.c1_closed_form(j, g, d, n, delta), f"c^(1)_{j} at {(g, d, n, delta)}")
        k += 1
    return k


def suite_twist(g_values, r_max: int = 2) -> int:
    k = 0
    for p in valid_tuples(g_values, r_max):
        base = 2 * p.g - 1 - p.d
        for delta in (1, p.n):
            values = {chow_oracle.fulton_pragacz_T(p, delta, m) for m in range(base, base + 5)}
            _check(len(values) == 1, f"{p}, delta={delta}: twist dependence {values}")
            k += 1
    return k


def _random_re2(rng, g):
    rnd = lambda: [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(g + 1)]  # noqa: E731
    return RingElement2(g, rnd(), rnd(), rnd())


def _random_re3(rng, g):
    # Elements avoiding g13 so that no product can produce g13*g23 directly.
    terms = {}
    for _ in range(rng.randint(1, 5)):
        bits = (rng.randint(0, 1), rng.randint(0, 1), rng.randint(0, 1), 0, rng.randint(0, 1))
        terms[(bits, rng.randint(0, g))] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    out = RingElement3(g)
    for (bits, f), c in terms.items():
        word = tuple(i for i in range(5) if bits[i]) + (THETA,) * f
        try:
            mono = RingElement3.scalar(g, c)
            for w in word:
                mono = mono * RingElement3.generator(g, w)
        except chow_oracle.UnreducibleMonomial:  # pragma: no cover
            continue
        out = out + mono
    return out


def suite_ring_axioms(rng: random.Random, trials: int = 40) -> int:
    k = 0
    for _ in range(trials):
        g = rng.randint(1, 6)
        x, y, z = (_random_re2(rng, g) for _ in range(3))
        _check((x * y) * z == x * (y * z), "RingElement2 associativity")
        _check(x * y == y * x, "RingElement2 commutativity")
        _check(x * (y + z) == x * y + x * z, "RingElement2 distributivity")
        u, v, w = (_random_re3(rng, g) for _ in range(3))
        try:
            _check((u * v) * w == u * (v * w), "RingElement3 associativity")
            _check(u * v == v * u, "RingElement3 commutativity")
        except chow_oracle.UnreducibleMonomial:
            pass
        k += 1
    k += check_confluence(genus=3)
    return k


def check_confluence(genus: int = 3) -> int:
    """Multiply generator words in every order and compare normal forms.

    Words use each of the five generators at most twice plus a few thetas.
    Orders that hit the undetermined product g13*g23 are skipped; all
    remaining orders of the same word must agree.
    """
    from itertools import permutations

    gens = (ETA1, ETA2, G12, G13, G23)
    checked = 0
    for exps in product(range(3), repeat=5):
        if sum(exps) > 4:
            continue
        for f in (0, 1):
            word = tuple(g for g, e in zip(gens, exps) for _ in range(e)) + (THETA,) * f
            results = set()
            for order in set(permutations(word)):
                try:
                    terms = chow_oracle._mul_word(RingElement3.ONE_BITS, 0, order, genus)
                except chow_oracle.UnreducibleMonomial:
                    continue
                results.add(frozenset(terms.items()))
            _check(len(results) <= 1, f"non-confluent word {word}")
            checked += 1
    return checked


def suite_vandermonde(rng: random.Random, trials: int = 200) -> int:
    for _ in range(trials):
        size = rng.randint(1, 6)
        b = sorted(rng.sample(range(31), size))
        bn_counts.vandermonde_delta(b)  # raises on disagreement
    return trials


def suite_mu_nu(g_values, r_max: int = 4) -> int:
    k = 0
    for p in valid_tuples([g for g in g_values if g >= 3], r_max):
        data = moduli_classes.mu_nu(p)
        _check(data.mu == data.nu * data.sigma, f"{p}: mu={data.mu}, nu*sigma={data.nu * data.sigma}")
        k += 1
    return k


def suite_secclass(g_values) -> int:
    k = 0
    for p in enumerated(g_values):
        g, n = p.g, p.n
        c = moduli_classes.secant_coefficients(p)
        for j in range(3, n + 1):
            _check(
                c.c_0j[j] == Fraction(j * (j - 1), 2) * c.c_0j[2] - j * (j - 2) * c.c_psi,
                f"{p}: c_0:{j} recursion",
            )
            _check(j * c.c_psi + (j - 2) * c.c_0j[j] - j * c.c_0j[j - 1] == 0, f"{p}: c_0:{j} relation")
        t1 = bn_counts.pointed_secant_count(p, 1).value
        _check(c.nu * ((2 * g + 2 * n - 4) * c.c_psi - (n - 1) * c.c_0j[2]) == t1, f"{p}: T(1) test curve")
        h_x, _ = moduli_classes.psi_from_two_point_system(p)
        _check(h_x == c.c_psi, f"{p}: two-point system gives {h_x}, c_psi = {c.c_psi}")
        cls = moduli_classes.secant_class_mgn(p)
        pbn = moduli_classes.pointed_bn_class(p)
        _check(cls.lambda_ == pbn.lambda_, f"{p}: lambda")
        _check(cls.delta_irr == pbn.delta_irr, f"{p}: delta_irr")
        for i in range(1, g):
            _check(cls.delta_i0[i] == pbn.delta(g - i), f"{p}: delta_{i}:0")
        k += 1
    return k


def suite_symprod(g_values, r1_g_max: int = 20) -> int:
    k = 0
    for p in enumerated(g_values):
        a = symprod.secant_class_cn(p)
        b = symprod.secant_class_cn_via_pullback(p)
        _check(a == b, f"{p}: direct {a} vs pullback {b}")
        _check(p.n * a.x + p.g * a.theta == 0, f"{p}: not on the ray theta - (g/n) x")
        _check(a.theta > 0 and a.x < 0, f"{p}: class outside the fourth quadrant")
        k += 1
    for g in range(2, r1_g_max + 1):
        for d in range(2, g + 1):
            n = 2 * d - g
            if n < 2:
                continue
            try:
                p = params.validate(g, 1, d, 1, n)
            except params.ParamError:
                continue
            _check(symprod.secant_class_cn(p) == symprod.r1_class(g, d), f"r=1 class at g={g}, d={d}")
            k += 1
    return k


def suite_coverage(g_min: int = 4, g_max: int = 30) -> int:
    k = 0
    for g in range(g_min, g_max + 1):
        for n in range(-(-g // 2), g - 1):
            _check(bool(params.enumerate_params(g, n)), f"no witness for g={g}, n={n}")
            k += 1
    return k


def build_suites(level: str, seed: int) -> list[tuple[str, Callable[[], int]]]:
    if level not in ("quick", "full"):
        raise ValueError(f"unknown level {level!r}")
    full = level == "full"
    rng = random.Random(seed)
    return [
        ("golden values", suite_golden),
        ("parameter identities", lambda: suite_params(range(2, 13 if full else 7))),
        ("product = sum formula", lambda: suite_formula_crossval(range(2, 13 if full else 7), 4 if full else 2, 10)),
        ("T endpoints", lambda: suite_t_endpoints(range(2, 13 if full else 7))),
        ("Weierstrass anchors", lambda: suite_weierstrass(20 if full else 10, 15 if full else 8)),
        ("Vandermonde variant", lambda: suite_vandermonde(rng, 200 if full else 30)),
        ("ring axioms and confluence", lambda: suite_ring_axioms(rng, 40 if full else 10)),
        ("GRR reproduction", lambda: suite_grr(rng, 20 if full else 5)),
        ("Fulton-Pragacz oracle", lambda: suite_fulton_pragacz(range(2, 9 if full else 5), 3 if full else 2)),
        ("twist independence", lambda: suite_twist(range(2, 7 if full else 4))),
        ("mu = nu * sigma", lambda: suite_mu_nu(range(3, 13 if full else 7))),
        ("moduli class identities", lambda: suite_secclass(range(2, 13 if full else 7))),
        ("symmetric product classes", lambda: suite_symprod(range(2, 13 if full else 7), 20 if full else 10)),
        ("coverage scan", lambda: suite_coverage(4, 30 if full else 12)),
    ]


def run_suites(level: str = "quick", seed: int = 0) -> list[SuiteResult]:
    results = []
    for name, fn in build_suites(level, seed):
        start = time.perf_counter()
        try:
            checked = fn()
            res = SuiteResult(name, True, checked)
        except _Fail as exc:
            res = SuiteResult(name, False, 0, str(exc))
        except (ArithmeticError, params.ParamError) as exc:
            res = SuiteResult(name, False, 0, f"{type(exc).__name__}: {exc}")
        res.seconds = time.perf_counter() - start
        results.append(res)
    return results
