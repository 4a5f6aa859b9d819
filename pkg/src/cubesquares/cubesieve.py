"""Sieve for sums of three positive cubes.

C(X) = { n <= X : n = a^3 + b^3 + c^3, a, b, c >= 1 }.  Smallest member
is 3; the set has positive but thin density at desk scales.  Optionally
the sieve also records r3(n), the number of ordered triples, saturating
at the uint16 ceiling.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np

from .errors import CapacityError
from .params import floor_nth_root

__all__ = ["CapacityError", "CubeSumSieve", "sieve_cube_sums", "memory_budget", "BUDGET_ENV"]


BUDGET_ENV = "CUBESQUARES_MEMORY_BUDGET"
SATURATE = np.iinfo(np.uint16).max


def memory_budget() -> int:
    """Byte budget for the big array allocations, overridable via env."""
    return int(os.environ.get(BUDGET_ENV, 2**31))


@dataclass
class CubeSumSieve:
    """Membership flags (and optional ordered-representation counts) for C(X)."""

    limit: int
    flags: np.ndarray = field(repr=False)
    counts: np.ndarray | None = field(default=None, repr=False)
    saturated: bool = False

    def __contains__(self, n: int) -> bool:
        return 0 <= n <= self.limit and bool(self.flags[n])

    @property
    def members(self) -> np.ndarray:
        return np.flatnonzero(self.flags).astype(np.int64)

    def r3(self, n: int) -> int:
        if self.counts is None:
            raise ValueError("sieve was built without counts")
        if not 0 <= n <= self.limit:
            return 0
        return int(self.counts[n])


def sieve_cube_sums(X: int, with_counts: bool = False, budget: int | None = None) -> CubeSumSieve:
    """Enumerate all ordered triples a^3 + b^3 + c^3 <= X.

    Work is O(X): the triple count itself is ~0.71 X.  Memory is guarded
    against `budget` bytes (default from CUBESQUARES_MEMORY_BUDGET or 2 GiB);
    a too-large request raises CapacityError before allocating.
    """
    if X < 0:
        raise ValueError("X must be >= 0")
    if budget is None:
        budget = memory_budget()
    need = (X + 1) * (1 + (2 + 16) * bool(with_counts))
    if need > budget:
        raise CapacityError(f"cube-sum sieve for X={X} needs ~{need} bytes > budget {budget}")

    flags = np.zeros(X + 1, dtype=bool)
    m = floor_nth_root(max(X - 2, 0), 3)
    if m < 1:
        return CubeSumSieve(limit=X, flags=flags, counts=np.zeros(X + 1, np.uint16) if with_counts else None)
    cubes = np.arange(1, m + 1, dtype=np.int64) ** 3
    pair = (cubes[:, None] + cubes[None, :]).ravel()
    pair = pair[pair <= X - 1]

    cnt = np.zeros(X + 1, dtype=np.int64) if with_counts else None
    for a3 in cubes.tolist():
        s = pair[pair <= X - a3] + a3
        flags[s] = True
        if cnt is not None:
            np.add.at(cnt, s, 1)

    counts = None
    saturated = False
    if cnt is not None:
        saturated = bool((cnt > SATURATE).any())
        counts = np.minimum(cnt, SATURATE).astype(np.uint16)
    return CubeSumSieve(limit=X, flags=flags, counts=counts, saturated=saturated)
