from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from secdiv.bn_counts import (
    castelnuovo_count,
    pointed_secant_count,
    secant_point_count,
    vandermonde_delta,
)
from secdiv.params import ParamError, validate
from secdiv.verify import valid_tuples

# Hand evaluation of the double sum, kept here as the frozen oracle.
#   (3,1,3,(0,3)): s=1, only (j1,j2)=(0,1): weight 3^2-1=8, shifted a=(-1,2), diff 3,
#                  1/(0! 3!) -> 8*3/6 = 4, times 3! = 24.
#   (4,1,3,(0,2)): s=2, weight 3, shifted (-1,1), diff 2, 1/(1! 3!) -> 1, times 4! = 24.
#   (6,2,6,(0,1,3)): s=2. (0,1): weight 0. (1,2): shifted (0,0,2) has a zero difference.
#                  (0,2): weight 8, shifted (-1,1,2): diffs 2*3*1 = 6, 1/(1! 3! 4!) = 1/144,
#                  8*6/144 = 1/3, times 720 = 240.
@pytest.mark.parametrize(
    "args,expected",
    [((3, 1, 3, (0, 3)), 24), ((4, 1, 3, (0, 2)), 24), ((6, 2, 6, (0, 1, 3)), 240)],
)
def test_castelnuovo_count_hand_values(args, expected):
    res = castelnuovo_count(*args)
    assert res.value == expected
    assert res.formula_tag == "general_sum"


def test_castelnuovo_count_rejects_wrong_rho():
    with pytest.raises(ParamError):
        castelnuovo_count(4, 1, 3, (0, 3))
    with pytest.raises(ParamError):
        castelnuovo_count(4, 1, 3, (0, 1, 2))


def test_castelnuovo_count_degenerate_sequence_is_zero():
    # (1,1,4) has rho(5,2,6,.) = -1 but a repeated entry
    assert castelnuovo_count(5, 2, 6, (1, 1, 4)).value == 0
    assert castelnuovo_count(5, 2, 6, (1, 2, 3)).value == 0
    assert castelnuovo_count(5, 2, 6, (0, 2, 4)).value == 240


@pytest.mark.parametrize(
    "tup,expected",
    [((3, 1, 3, 1, 3), 24), ((6, 2, 6, 2, 3), 240), ((4, 1, 3, 1, 2), 24)],
)
def test_secant_point_count(tup, expected):
    assert secant_point_count(validate(*tup)).value == expected


def test_pointed_secant_count_examples():
    assert pointed_secant_count(validate(3, 1, 3, 1, 3), 3).value == 24
    assert pointed_secant_count(validate(6, 2, 6, 2, 3), 1).value == 20
    assert pointed_secant_count(validate(6, 2, 6, 2, 3), 0).value == 0
    with pytest.raises(ParamError):
        pointed_secant_count(validate(6, 2, 6, 2, 3), 4)


def test_product_equals_sum_and_integral():
    n_checked = 0
    for p in valid_tuples(range(2, 11), 4, 10):
        a = secant_point_count(p).value
        assert a == castelnuovo_count(p.g, p.r, p.d, p.a).value, p
        assert a.denominator == 1 and a >= 0
        n_checked += 1
    assert n_checked > 50


def test_t_endpoint_identities():
    for p in valid_tuples(range(2, 11), 4):
        count = secant_point_count(p).value
        assert pointed_secant_count(p, 0).value == 0
        assert pointed_secant_count(p, p.n).value == count
        assert pointed_secant_count(p, 1).value == count / (p.n * (p.n + 1))


@pytest.mark.parametrize("g", range(2, 21))
def test_weierstrass_weight(g):
    assert castelnuovo_count(g, 1, g, (0, g)).value == g**3 - g


@pytest.mark.parametrize("b,expected", [((0, 1, 2), 1), ((1, 2, 4), Fraction(1, 8)), ((2, 2, 3), 0)])
def test_vandermonde_examples(b, expected):
    assert vandermonde_delta(b) == expected


def _sympy_det(b):
    r = len(b) - 1
    inv = lambda k: sympy.Integer(0) if k < 0 else 1 / sympy.factorial(k)  # noqa: E731
    m = sympy.Matrix([[inv(bi - r + j) for j in range(r + 1)] for bi in reversed(b)])
    return Fraction(str(m.det()))


@given(st.lists(st.integers(0, 30), min_size=1, max_size=5, unique=True).map(sorted))
def test_vandermonde_matches_sympy_determinant(b):
    assert vandermonde_delta(b) == _sympy_det(b)
