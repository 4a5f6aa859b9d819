import math

import pytest
from hypothesis import given, strategies as st

from cubesquares.errors import DegenerateParamsError
from cubesquares.params import Params, derive_params, floor_nth_root


def test_small_N_rejected():
    for N in (0, 1, 63):
        with pytest.raises(DegenerateParamsError):
            derive_params(N)
    derive_params(64)  # smallest admissible


@given(st.integers(min_value=0, max_value=10**30), st.integers(min_value=1, max_value=9))
def test_floor_nth_root_exact(n, k):
    r = floor_nth_root(n, k)
    assert r**k <= n
    assert (r + 1) ** k > n


def test_derived_scales_consistent():
    pp = derive_params(16**6)
    assert pp.P == 16
    assert math.isclose(pp.M, 16 ** (2 / 5))
    assert math.isclose(pp.H, 16 ** (9 / 5))
    # thin cube caps: 2*H1^3 = (3/2)*H2^3 = 6*H3^3 = H
    assert math.isclose(2 * pp.H1**3, pp.H)
    assert math.isclose(1.5 * pp.H2**3, pp.H)
    assert math.isclose(6 * pp.H3**3, pp.H)
    assert math.isclose(pp.M**3 * pp.H, pp.P**3)
    assert pp.R == max(2, math.ceil(pp.P**pp.eta))


def test_leading_ranges():
    pp = derive_params(16**6)
    assert list(pp.leading_range_main()) == list(range(9, 17))
    assert list(pp.leading_range_thin()) == []  # H1, H2 straddle no integer here
    pp27 = derive_params(27**6)
    assert list(pp27.leading_range_main()) == list(range(14, 28))
    assert list(pp27.leading_range_thin()) == [6]


def test_prime_window_and_defaults():
    pp = derive_params(27**6)
    lo, hi = pp.prime_window()
    assert lo == pp.M / 2 and hi == pp.M
    primes = pp.default_primes()
    assert primes == [2, 3]
    for p in primes:
        assert lo < p <= hi


def test_R_override_and_c_eta():
    pp = derive_params(64**6, R_override=7)
    assert pp.R == 7
    pp2 = pp.with_c_eta(0.25)
    assert pp2.c_eta == 0.25
    assert pp2.N == pp.N and pp2.R == pp.R
    assert isinstance(pp2, Params)


def test_frozen_dataclass():
    pp = derive_params(64**6)
    with pytest.raises(Exception):
        pp.P = 1
