import math
from fractions import Fraction

import pytest

from cubesquares.arcs import ArcDissection
from cubesquares.generating import (
    ArcDiagnostic,
    F_diagnostic,
    W_star,
    eval_W,
    eval_h,
    h_star,
    model_V,
    model_W,
)
from cubesquares.params import derive_params
from cubesquares.smooth import estimate_c_eta
from cubesquares.weights import WeightTable, build_weight_table


def test_h_at_zero_is_total_mass():
    t = WeightTable("a", (3, 5, 9), (1, 2, 4))
    assert eval_h(Fraction(0), t) == pytest.approx(7 + 0j)
    assert eval_h(0.0, t) == pytest.approx(7 + 0j)


def test_h_at_half_is_parity_sum():
    t = WeightTable("a", (3, 5, 8, 9), (1, 2, 3, 4))
    # e(v^2 / 2) = (-1)^(v^2) = (-1)^v
    expected = sum(c * (-1) ** (v % 2) for v, c in t.as_dict().items())
    got = eval_h(Fraction(1, 2), t)
    assert got.real == pytest.approx(expected, abs=1e-12)
    assert got.imag == pytest.approx(0.0, abs=1e-12)


def test_W_at_zero():
    t = WeightTable("b", (218, 225, 232), (1, 2, 1))
    assert eval_W(Fraction(0), t, [2, 3]) == pytest.approx(8 + 0j)
    assert eval_W(Fraction(0), t, []) == 0


def test_W_phase_scale():
    t = WeightTable("b", (3, 4), (1, 1))
    # single prime p: phases carry p^6 v^2
    p = 2
    alpha = Fraction(1, 7)
    direct = sum(
        c * complex(math.cos(2 * math.pi * ((p**6 * v * v) % 7) / 7), math.sin(2 * math.pi * ((p**6 * v * v) % 7) / 7))
        for v, c in t.as_dict().items()
    )
    got = eval_W(alpha, t, [p])
    assert got.real == pytest.approx(direct.real, abs=1e-12)
    assert got.imag == pytest.approx(direct.imag, abs=1e-12)


def test_model_V_at_zero():
    pp = derive_params(8**6)
    c = estimate_c_eta(pp.P, pp.R)
    v = model_V(0.0, 1, 0, pp, c)
    assert v.real == pytest.approx(c * c * pp.P**3 / 2, rel=1e-6)


def test_model_W_at_zero():
    pp = derive_params(27**6)
    c = estimate_c_eta(int(pp.H3), pp.R)
    w = model_W(0.0, 1, 0, pp, c, [2, 3])
    # sum over both primes of the thin volume, scaled by c^2
    assert w.real == pytest.approx(2 * c * c * (pp.H2 - pp.H1) * pp.H3**2, rel=1e-6)


def test_h_star_vanishes_off_arcs():
    pp = derive_params(8**6)
    ta = build_weight_table(pp, "a")
    d = ArcDissection.narrow(pp.P, pp.N)
    c = estimate_c_eta(pp.P, pp.R)
    # 0.237 is far from every a/q with q <= X at this width
    assert h_star(0.237, d, pp, c) == 0
    assert W_star(0.237, d, pp, c, pp.default_primes()) == 0
    # at the center of the q=1 arc the model is the real-volume term
    v = h_star(Fraction(0), d, pp, c)
    assert v.real == pytest.approx(c * c * pp.P**3 / 2, rel=1e-6)


def test_F_diagnostic_fields():
    pp = derive_params(8**6)
    ta = build_weight_table(pp, "a")
    tb = build_weight_table(pp, "b")
    primes = pp.default_primes()
    d = ArcDissection.wide(pp.P, pp.N)
    c1 = estimate_c_eta(pp.P, pp.R)
    c2 = estimate_c_eta(max(int(pp.H3), 1), pp.R)
    diag = F_diagnostic(Fraction(0), ta, tb, primes, d, pp, c1, c2)
    assert isinstance(diag, ArcDiagnostic)
    assert diag.on_arc
    assert diag.h == pytest.approx(eval_h(Fraction(0), ta))
    assert diag.W == pytest.approx(eval_W(Fraction(0), tb, primes))
    # F = h^2 W^2 - (model h)^2 (model W)^2 is finite
    assert math.isfinite(diag.F.real) and math.isfinite(diag.F.imag)
