"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

All comparisons are exact rational equalities. Each criterion also has a
wall-clock budget.
"""

import random
import time
from fractions import Fraction

import pytest

from secdiv import chow_oracle as co
from secdiv.bn_counts import castelnuovo_count, pointed_secant_count, secant_point_count
from secdiv.moduli_classes import (
    mu_nu,
    pointed_bn_class,
    secant_coefficients,
    w_class,
)
from secdiv.params import enumerate_params, validate
from secdiv.symprod import r1_class, secant_class_cn, secant_class_cn_via_pullback
from secdiv.verify import enumerated, printed_c_M1, printed_ch_M1, random_grr_inputs, valid_tuples


@pytest.fixture
def gate(capsys):
    def report(number, title, failures, checked, started, budget):
        elapsed = time.perf_counter() - started
        ok = not failures and checked > 0 and elapsed < budget
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({checked} checks, {elapsed:.2f}s / {budget}s)"
        if failures:
            line += f" first failure: {failures[0]}"
        with capsys.disabled():
            print("\n" + line)
        assert not failures, failures[:3]
        assert checked > 0
        assert elapsed < budget

    return report


def test_c1_formula_cross_validation(gate):
    start = time.perf_counter()
    failures, checked = [], 0
    for p in valid_tuples(range(2, 13), 4, 10):
        prod = secant_point_count(p).value
        total = castelnuovo_count(p.g, p.r, p.d, p.a).value
        if prod != total or prod.denominator != 1:
            failures.append((p, prod, total))
        checked += 1
    gate(1, "product formula = general sum, g<=12 r<=4 n<=10", failures, checked, start, 30)


def _quadratic(values):
    y0, y1, y2 = values[:3]
    return all(
        y0 * Fraction((x - 1) * (x - 2), 2) - y1 * x * (x - 2) + y2 * Fraction(x * (x - 1), 2) == y
        for x, y in enumerate(values)
    )


def test_c2_symbolic_oracle(gate):
    start = time.perf_counter()
    failures, checked = [], 0
    for p in valid_tuples(range(2, 9), 3):
        samples = []
        for delta in range(p.n + 1):
            oracle = co.fulton_pragacz_T(p, delta)
            if oracle != pointed_secant_count(p, delta).value:
                failures.append((p, delta, oracle))
            samples.append(oracle)
            checked += 1
        if not _quadratic(samples):
            failures.append((p, "not quadratic in delta"))
    gate(2, "Fulton-Pragacz determinant = T(delta), g<=8 r<=3", failures, checked, start, 300)


def test_c3_grr_reproduction(gate):
    start = time.perf_counter()
    failures, checked = [], 0
    for g, d, m, n, delta in random_grr_inputs(random.Random(20240), 20, g_max=10):
        ch = co.grr_pushforward(co.sheaf_ch_M1(g, d, m, n, delta), g)
        if ch != printed_ch_M1(g, d, m, n, delta):
            failures.append(("ch", g, d, m, n, delta))
        c = co.chern_classes_from_ch(co.ChernData.from_total(ch)).total()
        if c != printed_c_M1(g, d, n, delta):
            failures.append(("c", g, d, m, n, delta))
        checked += 1
    gate(3, "GRR pushforward and Chern classes of M1, 20 random inputs", failures, checked, start, 10)


def test_c4_mu_equals_nu_sigma(gate):
    start = time.perf_counter()
    failures, checked = [], 0
    # r <= g - 1 for every valid tuple, so r_max = 11 is exhaustive for g <= 12
    for p in valid_tuples(range(3, 13), 11):
        data = mu_nu(p)
        if data.mu != data.nu * data.sigma:
            failures.append((p, data))
        checked += 1
    gate(4, "mu = nu * sigma, g in 3..12", failures, checked, start, 60)


def test_c5_weierstrass_anchors(gate):
    start = time.perf_counter()
    failures, checked = [], 0
    for g in range(2, 21):
        if castelnuovo_count(g, 1, g, (0, g)).value != g**3 - g:
            failures.append(("count", g))
        checked += 1
    for g in range(3, 16):
        if pointed_bn_class(validate(g, 1, g, 1, g)) != w_class(g):
            failures.append(("class", g))
        checked += 1
    gate(5, "Weierstrass count g^3-g and pointed class = W", failures, checked, start, 5)


def test_c6_moduli_identities(gate):
    start = time.perf_counter()
    failures, checked = [], 0
    for p in enumerated(range(2, 13)):
        c = secant_coefficients(p)
        for j in range(3, p.n + 1):
            if j * c.c_psi + (j - 2) * c.c_0j[j] - j * c.c_0j[j - 1] != 0:
                failures.append((p, "recursion", j))
            if c.c_0j[j] != Fraction(j * (j - 1), 2) * c.c_0j[2] - j * (j - 2) * c.c_psi:
                failures.append((p, "closed recursion", j))
        lhs = c.nu * ((2 * p.g + 2 * p.n - 4) * c.c_psi - (p.n - 1) * c.c_0j[2])
        if lhs != pointed_secant_count(p, 1).value:
            failures.append((p, "T(1) test curve"))
        checked += 1
    gate(6, "c_0:j recursion and T(1) test curve, g<=12", failures, checked, start, 60)


def test_c7_symmetric_product_routes(gate):
    start = time.perf_counter()
    failures, checked = [], 0
    for p in enumerated(range(2, 13)):
        direct = secant_class_cn(p)
        if direct != secant_class_cn_via_pullback(p):
            failures.append((p, "pullback route"))
        if p.n * direct.x + p.g * direct.theta != 0:
            failures.append((p, "ray"))
        checked += 1
    for g in range(2, 21):
        for d in range(2, g + 1):
            if 2 * d - g < 2:
                continue
            if secant_class_cn(validate(g, 1, d, 1, 2 * d - g)) != r1_class(g, d):
                failures.append(("r=1", g, d))
            checked += 1
    gate(7, "direct = pullback class, ray theta-(g/n)x, r=1 formula", failures, checked, start, 60)


def test_c8_coverage(gate):
    start = time.perf_counter()
    failures, checked = [], 0
    for g in range(4, 31):
        for n in range(-(-g // 2), g - 1):
            if not enumerate_params(g, n):
                failures.append((g, n))
            checked += 1
    gate(8, "a secant divisor exists for 4<=g<=30, g/2<=n<=g-2", failures, checked, start, 60)


def test_c9_golden_values(gate):
    start = time.perf_counter()
    p623 = validate(6, 2, 6, 2, 3)
    c623 = secant_class_cn(p623)
    c412 = secant_class_cn(validate(4, 1, 3, 1, 2))
    checks = {
        "n_{3,1,3,(0,3)} = 24": castelnuovo_count(3, 1, 3, (0, 3)).value == 24,
        "n_{6,2,6,(0,1,3)} = 240": castelnuovo_count(6, 2, 6, (0, 1, 3)).value == 240,
        "T(1) = 20 at (6,2,6,2,3)": pointed_secant_count(p623, 1).value == 20,
        "class 5theta - 10x at (6,2,6,2,3)": (c623.theta, c623.x) == (5, -10),
        "class 2theta - 4x at (4,1,3,1,2)": (c412.theta, c412.x) == (2, -4),
    }
    failures = [name for name, ok in checks.items() if not ok]
    gate(9, "golden values", failures, len(checks), start, 5)
