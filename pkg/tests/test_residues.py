import math

import numpy as np
from hypothesis import given, strategies as st

from cubesquares.residues import (
    cube_residue_counts,
    cyclic_convolve,
    cyclic_convolve_direct,
    square_pushforward,
    t_distribution,
    t_square_distribution,
    unit_cube_residue_counts,
)


def test_t_distribution_frozen():
    assert t_distribution(9) == (189, 162, 81, 27, 0, 0, 27, 81, 162)
    assert t_distribution(1) == (1,)


@given(st.integers(min_value=1, max_value=80))
def test_distributions_total(q):
    assert sum(t_distribution(q)) == q**3
    assert sum(t_square_distribution(q)) == q**3


@given(st.integers(min_value=1, max_value=60))
def test_cube_counts_sum(q):
    c = cube_residue_counts(q)
    assert int(np.sum(c)) == q
    u = unit_cube_residue_counts(q)
    units = sum(1 for x in range(q) if math.gcd(x, q) == 1) if q > 1 else 1
    assert int(np.sum(u)) == units


@given(
    st.integers(min_value=1, max_value=40),
    st.integers(min_value=0, max_value=10**6),
)
def test_kronecker_convolution_matches_direct(q, seed):
    rng = np.random.default_rng(seed)
    a = rng.integers(0, 10**6, size=q)
    b = rng.integers(0, 10**6, size=q)
    fast = cyclic_convolve(a, b, q)
    slow = cyclic_convolve_direct(a, b, q)
    assert list(fast) == list(slow)


def test_square_pushforward():
    c = cube_residue_counts(7)
    s = square_pushforward(c, 7)
    expected = np.zeros(7, dtype=np.int64)
    for m in range(7):
        expected[(m * m) % 7] += c[m]
    assert np.array_equal(np.asarray(s), expected)


def test_cube_counts_large_modulus_path():
    # int64 vector path and the generic path must agree
    q = 2**12
    c = cube_residue_counts(q)
    brute = np.zeros(q, dtype=np.int64)
    for x in range(q):
        brute[pow(x, 3, q)] += 1
    assert np.array_equal(np.asarray(c), brute)
