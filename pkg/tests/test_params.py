import pytest

from secdiv.params import (
    CodimensionViolation,
    EnumerationLimits,
    NonPositiveS,
    ParamError,
    RangeViolation,
    enumerate_params,
    nonempty_condition,
    residual_params,
    rho,
    rho_pointed,
    validate,
)
from secdiv.verify import valid_tuples


@pytest.mark.parametrize("args,expected", [((4, 1, 3), 0), ((3, 1, 3), 1), ((6, 2, 6), 0)])
def test_rho(args, expected):
    assert rho(*args) == expected


@pytest.mark.parametrize(
    "args,expected",
    [((4, 1, 3, (0, 2)), -1), ((3, 1, 3, (0, 3)), -1), ((6, 2, 6, (0, 1, 3)), -1)],
)
def test_rho_pointed(args, expected):
    assert rho_pointed(*args) == expected


def test_rho_pointed_length_mismatch():
    with pytest.raises(ParamError):
        rho_pointed(4, 2, 3, (0, 2))


def test_validate_derives_s_and_a():
    p = validate(4, 1, 3, 1, 2)
    assert (p.s, p.a) == (2, (0, 2))
    p = validate(6, 2, 6, 2, 3)
    assert (p.s, p.a) == (2, (0, 1, 3))


def test_validate_auto_degree():
    assert validate(6, 2, "auto", 2, 3).d == 6
    assert validate(3, 1, "auto", 1, 3).d == 3


def test_validate_errors_are_distinct():
    with pytest.raises(CodimensionViolation):
        validate(5, 1, 3, 1, 2)
    with pytest.raises(RangeViolation):
        validate(6, 2, 6, 3, 4)  # t > r
    with pytest.raises(RangeViolation):
        validate(6, 2, 6, 2, 2)  # n < t + 1
    with pytest.raises(NonPositiveS):
        # rho(2,1,4) = 2 - 2*(-1) = 4 = (n-1)*1 - 1 for n = 6; s = -1
        validate(2, 1, 4, 1, 6)


# Each inequality evaluated by hand:
#   (3,1,3,1,3): s=1, k=(n-t)(r+1-t)=2. i: 3>=2 yes. ii: d=3 < 2n-1=5. iii: 3<=2 no. iv: t=r.
#   (4,1,3,1,2): s=2, k=1. i: s!=1. ii: 2>=1, 3>=3 yes. iii: 2<=1 no. iv: t=r.
#   (6,2,6,2,3): s=2, k=1. i: s!=1. ii: 3>=1, 6>=5 yes. iii: no. iv: t=r.
#   (6,2,7,1,3): s=1, k=4. i: 3>=4 no. ii: 3>=5 no. iii: 3<=4 yes. iv: t!=r.
@pytest.mark.parametrize(
    "tup,expected",
    [
        ((3, 1, 3, 1, 3), {"i", "iv"}),
        ((4, 1, 3, 1, 2), {"ii", "iv"}),
        ((6, 2, 6, 2, 3), {"ii", "iv"}),
        ((6, 2, 7, 1, 3), {"iii"}),
    ],
)
def test_nonempty_condition(tup, expected):
    assert nonempty_condition(validate(*tup)) == expected


def _brute_force(g, n, r_max=6, d_max=None):
    d_max = 4 * g if d_max is None else d_max
    out = []
    for r in range(1, r_max + 1):
        for t in range(1, r + 1):
            for d in range(2, d_max + 1):
                try:
                    p = validate(g, r, d, t, n)
                except ParamError:
                    continue
                if nonempty_condition(p):
                    out.append((r, t, d))
    return sorted(out)


@pytest.mark.parametrize("g,n", [(4, 2), (6, 3), (7, 4), (9, 5), (10, 7)])
def test_enumerate_matches_exhaustive_scan(g, n):
    got = [(p.r, p.t, p.d) for p in enumerate_params(g, n, EnumerationLimits(r_max=6))]
    assert got == _brute_force(g, n)


def test_enumerate_examples():
    assert (1, 1, 3) in [(p.r, p.t, p.d) for p in enumerate_params(4, 2)]
    assert (2, 2, 6) in [(p.r, p.t, p.d) for p in enumerate_params(6, 3)]
    assert enumerate_params(3, 1) == []


def test_enumerate_respects_limits():
    full = enumerate_params(10, 6)
    capped = enumerate_params(10, 6, EnumerationLimits(r_max=3, d_max=11))
    assert capped and len(capped) < len(full)
    assert all(p.r <= 3 and p.d <= 11 for p in capped)


def test_limits_from_file(tmp_path):
    cfg = tmp_path / "limits.cfg"
    cfg.write_text("# ceilings\nr_max = 4\nd_max=30\n")
    assert EnumerationLimits.from_file(cfg) == EnumerationLimits(r_max=4, d_max=30)
    cfg.write_text("colour=blue\n")
    with pytest.raises(ValueError):
        EnumerationLimits.from_file(cfg)


@pytest.mark.parametrize(
    "tup,expected",
    [
        ((6, 2, 6, 2, 3), (6, 2, 7, 1, 3)),
        ((3, 1, 3, 1, 3), (3, 2, 4, 2, 3)),
        ((4, 1, 3, 1, 2), (4, 2, 5, 1, 2)),
    ],
)
def test_residual_params(tup, expected):
    assert residual_params(validate(*tup)) == expected


def test_residual_needs_t_equal_r():
    with pytest.raises(ParamError):
        residual_params(validate(6, 2, 7, 1, 3))


def test_tuple_identities():
    count = 0
    for p in valid_tuples(range(2, 16), 6):
        rh = rho(p.g, p.r, p.d)
        assert rho_pointed(p.g, p.r, p.d, p.a) == -1
        assert p.g == (p.r + 1) * p.s + rh
        assert p.d == (p.s + 1) * p.r + rh
        if p.t == p.r:
            g, r, d, t, n = residual_params(p)
            assert rho(g, r, d) == (n - t) * (r + 1 - t) - 1
        count += 1
    assert count > 100


def test_coverage_claim():
    for g in range(4, 31):
        for n in range(-(-g // 2), g - 1):
            assert enumerate_params(g, n), (g, n)
