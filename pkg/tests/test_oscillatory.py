import math

import pytest
from hypothesis import given, strategies as st

from cubesquares.errors import QuadratureError
from cubesquares.oscillatory import (
    kernel_quad,
    osc_integral_v,
    osc_integral_v_thin,
    plain_slot,
    scaled_slot,
    thin_volume,
    v_at_zero,
)
from cubesquares.params import derive_params


def test_value_at_zero():
    pp = derive_params(8**6)
    assert v_at_zero(pp) == pp.P**3 / 2
    for method in ("kernel1d", "cubature3d"):
        v0 = osc_integral_v(0.0, pp, method=method)
        assert abs(v0 - 256.0) / 256.0 < 1e-7


def test_routes_agree_off_zero():
    pp = derive_params(8**6)
    for k in (1, 2, 5):
        beta = 2.0 * k / pp.N
        a = osc_integral_v(beta, pp, method="kernel1d")
        b = osc_integral_v(beta, pp, method="cubature3d")
        assert abs(a - b) <= 1e-5 * max(abs(a), abs(b))


@given(
    st.floats(min_value=0.1, max_value=5.0),
    st.floats(min_value=0.1, max_value=5.0),
    st.floats(min_value=0.0, max_value=0.05),
)
def test_slot_mass_is_interval_length(lo, width, C):
    slot = plain_slot(lo, lo + width, C)
    assert slot.mass == pytest.approx(width, rel=1e-12)


@given(
    st.floats(min_value=0.5, max_value=5.0),
    st.floats(min_value=0.1, max_value=3.0),
    st.floats(min_value=0.0, max_value=1.0),
    st.integers(min_value=2, max_value=7),
)
def test_scaled_slot_mass_invariant(lo, width, C, p):
    # the p-scaling changes the value range but not the carried mass
    plain = plain_slot(lo, lo + width, C)
    scaled = scaled_slot(lo, lo + width, C, p)
    assert scaled.mass == pytest.approx(plain.mass, rel=1e-10)
    assert scaled.s_lo == pytest.approx(p**3 * plain.s_lo, rel=1e-12)
    assert scaled.C == pytest.approx(p**3 * plain.C, rel=1e-12)


def test_kernel_quad_at_zero_equals_mass():
    slot = plain_slot(1.0, 2.5, 0.2)
    val = kernel_quad(slot, 0.0)
    assert val.real == pytest.approx(slot.mass, rel=1e-9)
    assert abs(val.imag) < 1e-12


def test_thin_integral_at_zero():
    pp = derive_params(27**6)
    for p in (2, 3):
        v = osc_integral_v_thin(0.0, p, pp)
        assert v.real == pytest.approx(thin_volume(pp), rel=1e-7)
        assert abs(v.imag) < 1e-9 * thin_volume(pp)


def test_node_budget_guard():
    pp = derive_params(16**6)
    with pytest.raises(QuadratureError):
        osc_integral_v(10.0, pp, method="kernel1d")
