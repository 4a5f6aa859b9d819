import numpy as np
import pytest

from cubesquares.errors import CapacityError, QuadratureError
from cubesquares.mainterm import (
    RnEvaluator,
    conv4_value,
    conv4_value_beta,
    exact_Rn,
    main_term_report,
    rn_dense_dft,
    singular_integral_J,
)
from cubesquares.oscillatory import plain_slot
from cubesquares.params import derive_params
from cubesquares.weights import WeightTable

TOY_A = WeightTable("a", (3,), (1,))
TOY_B = WeightTable("b", (3,), (1,))


def test_hand_checked_values():
    # single bulk value 3, single thin value 3, prime 2:
    # every term is v^2 or (2^3 * 3)^2 = 576; 1170 = 576 + 576 + 9 + 9
    assert exact_Rn(1170, TOY_A, TOY_B, [2]) == 1
    assert exact_Rn(663_570, TOY_A, TOY_B, [2]) == 0
    assert exact_Rn(0, TOY_A, TOY_B, [2]) == 0


def test_evaluator_totals():
    ev = RnEvaluator(TOY_A, TOY_B, [2])
    assert ev.total == 1
    assert ev.max_n == 1170
    richer = RnEvaluator(
        WeightTable("a", (3, 5), (1, 2)),
        WeightTable("b", (3, 4), (1, 1)),
        [2, 3],
    )
    assert richer.total == (1 + 2) ** 2 * (2 * (1 + 1)) ** 2


def test_dense_dft_matches_sparse():
    ta = WeightTable("a", (3, 5, 7), (1, 2, 1))
    tb = WeightTable("b", (3, 4), (2, 1))
    primes = [2, 3]
    ev = RnEvaluator(ta, tb, primes)
    dense = rn_dense_dft(ta, tb, primes)
    assert len(dense) == ev.max_n + 1
    for n in range(ev.max_n + 1):
        assert int(dense[n]) == ev(n)
    assert int(dense.sum()) == ev.total


def test_dense_dft_margin_guard():
    ta = WeightTable("a", (3,), (2_000_000,))
    tb = WeightTable("b", (3,), (1_000_000,))
    with pytest.raises(CapacityError):
        rn_dense_dft(ta, tb, [2])


def _slots_for(P):
    pp = derive_params(P**6)
    return (
        plain_slot(pp.H1, pp.H2, 0.0),
        plain_slot(pp.H1, pp.H2, 0.0),
        plain_slot(pp.P / 2, pp.P, 0.0),
        plain_slot(pp.P / 2, pp.P, 0.0),
    )


def test_conv4_routes_agree():
    slots = _slots_for(8)
    glo = sum(s.gamma_lo for s in slots)
    ghi = sum(s.gamma_hi for s in slots)
    for frac in (0.3, 0.5, 0.7):
        n = glo + frac * (ghi - glo)
        v1 = conv4_value(slots, n)
        v2 = conv4_value_beta(slots, n)
        # the beta route truncates at |beta| <= K/n with an O(1/K) tail
        assert v2 == pytest.approx(v1, rel=2e-2)
    n = glo + 0.5 * (ghi - glo)
    v1 = conv4_value(slots, n)
    v2 = conv4_value_beta(slots, n, K=160.0)
    assert v2 == pytest.approx(v1, rel=5e-3)


def test_conv4_outside_support_is_zero():
    slots = _slots_for(8)
    ghi = sum(s.gamma_hi for s in slots)
    assert conv4_value(slots, ghi * 1.5) == 0.0


def test_conv4_beta_grid_guard():
    slots = _slots_for(8)
    with pytest.raises(QuadratureError):
        conv4_value_beta(slots, 1.0)


def test_J_exhaustive_frozen():
    pp = derive_params(8**6)
    j = singular_integral_J(196_608, pp, [2])
    assert not j.flagged
    assert j.value == pytest.approx(0.00033530136406281975, rel=1e-9)


def test_J_monte_carlo_deterministic():
    pp = derive_params(27**6)
    j1 = singular_integral_J(pp.N * 3 // 4, pp, [2, 3], seed=7, samples=200, exhaustive_cap=1)
    j2 = singular_integral_J(pp.N * 3 // 4, pp, [2, 3], seed=7, samples=200, exhaustive_cap=1)
    assert j1.value == j2.value
    assert j1.stderr == j2.stderr
    assert j1.value >= 0


def test_main_term_report_shape():
    from cubesquares.weights import build_weight_table

    pp = derive_params(8**6)
    ta = build_weight_table(pp, "a")
    tb = build_weight_table(pp, "b")
    rep = main_term_report(196_608, pp, ta, tb, [2], Q=32)
    d = rep.as_json_dict()
    assert d["n"] == 196_608
    assert set(d) == {"n", "R_exact", "S_trunc", "J_est", "J_stderr", "predicted", "ratio"}
    assert d["predicted"] == pytest.approx(d["S_trunc"] * d["J_est"])
