from fractions import Fraction

import pytest

from secdiv.arith import binomial
from secdiv.bn_counts import castelnuovo_count, pointed_secant_count
from secdiv.moduli_classes import (
    PicClassM_g1,
    UnknownCoefficient,
    bn_class,
    mu_nu,
    pointed_bn_class,
    psi_from_two_point_system,
    secant_class_mgn,
    secant_coefficients,
    sigma_coeff,
    w_class,
)
from secdiv.params import ParamError, SecantParams, nonempty_condition, validate
from secdiv.verify import enumerated, valid_tuples


def test_bn_class():
    assert bn_class(3) == PicClassM_g1(3, Fraction(6), Fraction(0), Fraction(-2, 3), (Fraction(-2), Fraction(-2)))
    assert bn_class(4).delta(2) == -4
    assert all(bn_class(g).psi == 0 for g in range(2, 10))


def test_w_class():
    assert w_class(2) == PicClassM_g1(2, Fraction(-1), Fraction(3), Fraction(0), (Fraction(-1),))
    assert w_class(6).psi == 21
    assert all(w_class(g).delta_irr == 0 for g in range(2, 10))


def test_sigma_examples():
    # (6,2,6,2,3): e = 6-6-2+1 = -1, s = 2. Numerator:
    #   (te+g+1) = 5, (n-t) = 1, (n-t)(3te-g-1) = -13, 2(g+1)(e-t) = -42 -> 5*(-55) = -275;
    #   (d+1)(g+1)^2(d-2g+1) = 7*49*(-5) = -1715; -275 + 1715 = 1440.
    # Denominator 2*4*2*5*2*1*1*4 = 640.
    assert sigma_coeff(validate(6, 2, 6, 2, 3)) == Fraction(1440, 640) == Fraction(9, 4)
    assert sigma_coeff(validate(3, 1, 3, 1, 3)) == 0
    assert sigma_coeff(validate(2, 1, 2, 1, 2)) == 0


def test_mu_nu_examples():
    data = mu_nu(validate(3, 1, 3, 1, 3))
    assert (data.nu, data.mu) == (1, 0)
    data = mu_nu(validate(6, 2, 6, 2, 3))
    # shifted sequences (0,2,4) and (1,2,3), the third (1,1,4) collapses
    assert castelnuovo_count(5, 2, 6, (0, 2, 4)).value + castelnuovo_count(5, 2, 6, (1, 2, 3)).value == 240
    assert data.mu == Fraction(18, 7)
    assert data.nu == Fraction(8, 7)
    assert data.mu == data.nu * data.sigma


def test_mu_nu_rejects_genus_two():
    with pytest.raises(ParamError):
        mu_nu(validate(2, 1, 2, 1, 2))


def test_mu_equals_nu_sigma():
    for p in valid_tuples(range(3, 11), 10):
        d = mu_nu(p)
        assert d.mu == d.nu * d.sigma, p
        if d.count > 0:
            assert d.nu > 0


def test_pointed_bn_class_examples():
    assert pointed_bn_class(validate(3, 1, 3, 1, 3)) == PicClassM_g1(
        3, Fraction(-1), Fraction(6), Fraction(0), (Fraction(-3), Fraction(-1))
    )
    cls = pointed_bn_class(validate(6, 2, 6, 2, 3))
    assert cls.lambda_ == 22
    for p in enumerated(range(3, 9)):
        nu = Fraction(castelnuovo_count(p.g, p.r, p.d, p.a).value, p.g * (p.g**2 - 1))
        assert pointed_bn_class(p).delta_irr == -nu * sigma_coeff(p) * Fraction(p.g + 1, 6)


@pytest.mark.parametrize("g", range(3, 16))
def test_weierstrass_degeneration(g):
    assert pointed_bn_class(validate(g, 1, g, 1, g)) == w_class(g)


def test_secant_class_example():
    p = validate(6, 2, 6, 2, 3)
    c = secant_coefficients(p)
    assert c.c_psi == Fraction(21, 8)
    assert c.c_0j[2] == Fraction(77, 8)
    cls = secant_class_mgn(p)
    assert cls.psi_each == 3
    assert "not computed" in cls.unknown
    with pytest.raises(UnknownCoefficient):
        cls.coefficient(1, 2)
    assert cls.coefficient(0, 2) == -11


def test_genus_two_branch():
    c = secant_coefficients(validate(2, 1, 2, 1, 2))
    assert c.c_lambda == -1
    assert c.c_irr == 0


def test_nonempty_required():
    # bypasses validate: s = -1 meets none of the criteria
    p = SecantParams(2, 1, 4, 1, 6)
    assert not nonempty_condition(p)
    with pytest.raises(ParamError):
        secant_class_mgn(p)


def test_recursion_and_test_curves():
    for p in enumerated(range(2, 11)):
        c = secant_coefficients(p)
        for j in range(3, p.n + 1):
            assert c.c_0j[j] == Fraction(j * (j - 1), 2) * c.c_0j[2] - j * (j - 2) * c.c_psi
            assert j * c.c_psi + (j - 2) * c.c_0j[j] - j * c.c_0j[j - 1] == 0
        lhs = c.nu * ((2 * p.g + 2 * p.n - 4) * c.c_psi - (p.n - 1) * c.c_0j[2])
        assert lhs == pointed_secant_count(p, 1).value


def test_two_point_system_recovers_c_psi():
    for p in enumerated(range(2, 11)):
        h_x, _ = psi_from_two_point_system(p)
        assert h_x == secant_coefficients(p).c_psi
        assert binomial(p.g + 1, 2) == w_class(p.g).psi


def test_boundary_coefficients_match_pointed_class():
    for p in enumerated(range(3, 10)):
        cls, pbn = secant_class_mgn(p), pointed_bn_class(p)
        assert cls.lambda_ == pbn.lambda_
        assert cls.delta_irr == pbn.delta_irr
        for i in range(1, p.g):
            assert cls.delta_i0[i] == pbn.delta(p.g - i)
