import math
from fractions import Fraction

from hypothesis import given, strategies as st

from cubesquares.arcs import TAU, ArcDissection, classify, upsilon


def _oracle_classify(alpha: Fraction, X: float, n: int):
    # smallest q <= X admitting |alpha - a/q| <= X / (q n), a = nearest integer to q alpha
    best = None
    for q in range(1, int(X) + 1):
        a = round(q * alpha)
        if abs(alpha - Fraction(a, q)) <= Fraction(X) / (q * n):
            best = (a, q)
            break
    return best


def test_center_hits():
    hit = classify(0.5, 2, 64**6)
    assert (hit.a, hit.q) == (1, 2)
    assert hit.beta == 0.0
    hit = classify(Fraction(1, 3), 5, 10**6)
    assert (hit.a, hit.q) == (1, 3)


def test_tau_value():
    assert TAU == 18 / 31


@given(
    st.fractions(min_value=0, max_value=1, max_denominator=400).filter(lambda f: f < 1),
    st.integers(min_value=2, max_value=40),
)
def test_classify_matches_oracle(alpha, X):
    n = 10**6
    got = classify(alpha, X, n)
    want = _oracle_classify(alpha, X, n)
    if want is None:
        assert got is None
    else:
        assert got is not None
        assert got.q == want[1]  # a may differ on exact half-way ties
        assert abs(alpha - Fraction(got.a, got.q)) <= Fraction(X) / (got.q * n)


def test_dissection_scales():
    P = 16
    n = P**6
    wide = ArcDissection.wide(P, n)
    assert math.isclose(wide.X, P**0.8)
    narrow = ArcDissection.narrow(P, n)
    assert math.isclose(narrow.X, math.log(P) ** TAU)
    assert wide.half_width(3) == wide.X / (3 * n)


def test_classify_beta_sign():
    # q=2 arc half width is 2 / (2 * 64^6) ~ 1.4e-11, so 1e-12 stays inside
    hit = classify(0.5 + 1e-12, 2, 64**6)
    assert hit is not None and (hit.a, hit.q) == (1, 2) and hit.beta > 0
    hit = classify(0.5 - 1e-12, 2, 64**6)
    assert hit is not None and (hit.a, hit.q) == (1, 2) and hit.beta < 0


def test_upsilon_indicator():
    n = 16**6
    assert upsilon(0.5, 4, n) == 1.0
    # far from every a/q with q <= 4 at this arc width
    alpha = 0.5 + 0.01
    assert upsilon(alpha, 4, n) == 0.0


def test_upsilon_softening():
    n = 16**6
    X = 4.0
    # just inside the q=2 arc edge
    edge = X / (2 * n)
    inside = 0.5 + edge * 0.999
    assert upsilon(inside, X, n) == 1.0
    val = upsilon(inside, X, n, eps=0.5)
    assert 0.0 < val <= 1.0
