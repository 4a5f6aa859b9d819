"""Exceptional-set census: which n are four squares of three-cube sums.

C = sums of three positive cubes (min 3).  n is representable when
n = c1^2 + c2^2 + c3^2 + c4^2 with all ci in C.  The census builds the
pair-sum bitset, squares it with a real FFT (boolean convolution with a
rounding-margin guard), and reports the exceptional set E(N), witnesses,
and the provable obstruction family n = 2^(6+12j).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .cubesieve import CapacityError, memory_budget, sieve_cube_sums
from .errors import VerificationError
from .params import floor_nth_root


@dataclass
class Census:
    """Representability data for 1..N."""

    N: int
    cube_sums: np.ndarray = field(repr=False)  # members of C up to floor(sqrt(N))
    pair: np.ndarray = field(repr=False)  # bool: sums of two squares of C-members
    representable: np.ndarray = field(repr=False)  # bool over 0..N

    @property
    def exceptional(self) -> np.ndarray:
        out = ~self.representable
        out[0] = False
        return out

    @property
    def E_count(self) -> int:
        return int(self.exceptional.sum())

    def density_curve(self, points: int = 10) -> list[list[int]]:
        """[[t, |E(t)|], ...] at t = N/points, 2N/points, ..., N."""
        cum = np.cumsum(self.exceptional)
        out = []
        for i in range(1, points + 1):
            t = self.N * i // points
            out.append([int(t), int(cum[t])])
        return out


def _fft_bool_square(mask: np.ndarray, N: int) -> np.ndarray:
    """Positions reachable as a sum of two (possibly equal) set elements."""
    top = 2 * (mask.size - 1)
    L = 1 << max(1, top.bit_length())
    norm = float(np.sqrt(mask.sum()))
    margin = 8.0 * math.log2(L) * np.finfo(np.float64).eps * norm * norm
    if margin > 0.25:
        raise CapacityError(f"FFT rounding margin {margin:.3g} too large at N={N}")
    f = np.fft.rfft(mask.astype(np.float64), n=L)
    conv = np.fft.irfft(f * f, n=L)
    out = conv[: N + 1] > 0.5
    return out


def run_census(N: int, budget: int | None = None) -> Census:
    if N < 1:
        raise ValueError("N must be >= 1")
    if budget is None:
        budget = memory_budget()
    # bitsets + three transient FFT arrays of length ~4N
    need = 110 * (N + 1)
    if need > budget:
        raise CapacityError(f"census at N={N} needs ~{need} bytes > budget {budget}")
    root = floor_nth_root(N, 2)
    sieve = sieve_cube_sums(root, budget=budget)
    members = sieve.members
    pair = np.zeros(N + 1, dtype=bool)
    sq = members.astype(np.int64) ** 2
    for c2 in sq.tolist():
        rest = sq[sq <= N - c2]
        pair[rest + c2] = True
    representable = _fft_bool_square(pair, N)
    cens = Census(N=N, cube_sums=members, pair=pair, representable=representable)
    _assert_family_consistency(cens)
    return cens


def witness_for(census: Census, n: int) -> tuple[int, int, int, int] | None:
    """Lexicographically least c1 <= c2 <= c3 <= c4 with sum of squares n."""
    members = census.cube_sums.tolist()
    mset = set(members)
    for c1 in members:
        s1 = c1 * c1
        if 4 * s1 > n:
            break
        for c2 in members:
            if c2 < c1:
                continue
            s2 = s1 + c2 * c2
            if s2 + 2 * c2 * c2 > n:
                break
            for c3 in members:
                if c3 < c2:
                    continue
                s3 = s2 + c3 * c3
                if s3 + c3 * c3 > n:
                    break
                rest = n - s3
                c4 = math.isqrt(rest)
                if c4 * c4 == rest and c4 >= c3 and c4 in mset:
                    return (c1, c2, c3, c4)
    return None


def brute_force_representable(N: int) -> np.ndarray:
    """Quadruple loop oracle over C intersect [1, sqrt(N)]; O(|C|^3 sqrt)."""
    root = floor_nth_root(N, 2)
    members = sieve_cube_sums(root).members.tolist()
    mset = {m * m for m in members}
    out = np.zeros(N + 1, dtype=bool)
    for c1 in members:
        for c2 in members:
            s2 = c1 * c1 + c2 * c2
            if s2 > N:
                break
            for c3 in members:
                s3 = s2 + c3 * c3
                if s3 > N:
                    break
                for s4 in mset:
                    if s3 + s4 <= N:
                        out[s3 + s4] = True
    return out


# -- the provable obstruction family ------------------------------------------


@dataclass
class ObstructionProof:
    """Modular descent showing 2^(6+12j) is not representable.

    Any four-square representation of a multiple of 8 has all roots even
    (checked over all residues mod 8), so dividing by 4 descends until the
    target is 4, forcing every root to be 2^(2+6j); but that is 4 mod 9,
    and sums of three cubes mod 9 omit {4, 5} (checked), contradiction.
    """

    j: int
    n: int
    descents: int
    forced_root: int
    forced_root_mod9: int

    def verify(self) -> bool:
        if self.n != 2 ** (6 + 12 * self.j):
            raise VerificationError("family member mismatch")
        # descent step: residues mod 8 with s1^2+..+s4^2 = 0 (mod 8) are all even
        for a in range(8):
            for b in range(8):
                for c in range(8):
                    for d in range(8):
                        if (a * a + b * b + c * c + d * d) % 8 == 0 and (a % 2 or b % 2 or c % 2 or d % 2):
                            raise VerificationError("descent step failed: odd root mod 8")
        m = self.n
        k = 0
        while m % 8 == 0:
            m //= 4
            k += 1
        if m != 4 or k != self.descents:
            raise VerificationError(f"descent lands at {m} after {k} steps, expected 4 after {self.descents}")
        # positive solutions of z1^2+..+z4^2 = 4 are exactly (1,1,1,1)
        sols = [
            (z1, z2, z3, z4)
            for z1 in range(1, 3)
            for z2 in range(1, 3)
            for z3 in range(1, 3)
            for z4 in range(1, 3)
            if z1 * z1 + z2 * z2 + z3 * z3 + z4 * z4 == 4
        ]
        if sols != [(1, 1, 1, 1)]:
            raise VerificationError("terminal equation has unexpected solutions")
        if self.forced_root != 2 ** (2 + 6 * self.j):
            raise VerificationError("forced root mismatch")
        if self.forced_root % 9 != self.forced_root_mod9 or self.forced_root_mod9 != 4:
            raise VerificationError("forced root is not 4 mod 9")
        cube_sums_mod9 = {(a**3 + b**3 + c**3) % 9 for a in range(9) for b in range(9) for c in range(9)}
        if self.forced_root_mod9 in cube_sums_mod9:
            raise VerificationError("forced root residue is attainable by three cubes mod 9")
        return True


def verify_obstruction_family(j: int) -> ObstructionProof:
    n = 2 ** (6 + 12 * j)
    proof = ObstructionProof(
        j=j, n=n, descents=2 + 6 * j, forced_root=2 ** (2 + 6 * j), forced_root_mod9=2 ** (2 + 6 * j) % 9
    )
    proof.verify()
    return proof


def family_members_upto(N: int) -> list[int]:
    out = []
    j = 0
    while 2 ** (6 + 12 * j) <= N:
        out.append(2 ** (6 + 12 * j))
        j += 1
    return out


def _assert_family_consistency(census: Census) -> None:
    """The proved family must show up as exceptional; checked, not assumed."""
    for n in family_members_upto(census.N):
        if census.representable[n]:
            raise VerificationError(f"family member {n} claims to be representable")


@dataclass
class DyadicFilter:
    """n <= N divisible by 2^k, k minimal with 2^k >= (ln N)^upsilon."""

    N: int
    upsilon: float
    k: int
    modulus: int
    count: int


def filter_A_upsilon(N: int, upsilon: float) -> DyadicFilter:
    if N < 3:
        raise ValueError("N must be >= 3 so ln N > 1")
    target = math.log(N) ** upsilon
    k = 0
    while 2**k < target:
        k += 1
    return DyadicFilter(N=N, upsilon=upsilon, k=k, modulus=2**k, count=N // 2**k)
