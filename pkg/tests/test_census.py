import numpy as np
import pytest

from cubesquares.census import (
    DyadicFilter,
    brute_force_representable,
    family_members_upto,
    filter_A_upsilon,
    run_census,
    verify_obstruction_family,
    witness_for,
)
from cubesquares.errors import VerificationError


def test_counts_frozen():
    c = run_census(1000)
    assert c.E_count == 979
    big = run_census(100_000)
    assert big.E_count == 71407
    assert big.density_curve(10)[:3] == [[10000, 9143], [20000, 17466], [30000, 25167]]


def test_matches_brute_force():
    N = 3000
    c = run_census(N)
    brute = brute_force_representable(N)
    assert np.array_equal(c.representable, brute)


def test_witnesses():
    c = run_census(2000)
    assert witness_for(c, 36) == (3, 3, 3, 3)
    assert witness_for(c, 64) is None  # exceptional
    # a reported witness really is one
    n = 1236
    w = witness_for(c, n)
    if w is not None:
        assert sum(x * x for x in w) == n


def test_small_n_all_exceptional():
    c = run_census(100)
    # least member of C is 3, so nothing below 4 * 9 can be hit
    assert not c.representable[:36].any()
    assert c.representable[36]


def test_obstruction_family():
    for j in range(4):
        proof = verify_obstruction_family(j)
        assert proof.n == 2 ** (6 + 12 * j)
        assert proof.verify()
    c = run_census(100_000)
    assert c.exceptional[64]


def test_obstruction_tamper():
    import dataclasses

    proof = verify_obstruction_family(1)
    with pytest.raises(VerificationError):
        dataclasses.replace(proof, forced_root_mod9=5).verify()


def test_family_members():
    assert family_members_upto(2**20) == [64, 262144]
    assert family_members_upto(63) == []


def test_filter_frozen():
    f = filter_A_upsilon(10**6, 2.0)
    assert isinstance(f, DyadicFilter)
    assert f.k == 8
    assert f.modulus == 256
    assert f.count == 3906
    assert f.count == 10**6 // 256


def test_filter_k_minimal():
    import math

    f = filter_A_upsilon(10**6, 2.0)
    assert 2**f.k >= math.log(10**6) ** 2.0
    assert 2 ** (f.k - 1) < math.log(10**6) ** 2.0
