"""Exact representation counts and the model main term they are compared to.

    R(n) = # ordered ((x, h1), (x', h2), v, v') with
           n = p1^6 h1^2 + p2^6 h2^2 + v^2 + v'^2,

weighted by the table multiplicities: v, v' run over the bulk table, h1, h2
over the thin table, p1, p2 over the prime window.  R is a double
convolution of two integer-indexed series, evaluated sparsely and exactly;
a dense FFT route over the full index range cross-checks it.

The model main term is (singular series at n) * J(n) where J(n) is the
four-fold convolution of the kernel slot densities at n, summed over the
discrete smooth tuples and prime pairs.  That sum is evaluated exhaustively
when small, else by seeded Monte Carlo over tuples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import CapacityError, QuadratureError
from .expsums import SeriesTruncation, truncated_singular_series
from .oscillatory import KernelSlot, _panel_rule, plain_slot, scaled_slot
from .params import Params
from .smooth import enumerate_smooth
from .weights import WeightTable

# -- exact counts --------------------------------------------------------------


def square_series(table: WeightTable) -> dict[int, int]:
    """k = v^2 -> total multiplicity (exact, Python ints)."""
    out: dict[int, int] = {}
    for v, c in zip(table.support.tolist(), table.counts.tolist()):
        k = v * v
        out[k] = out.get(k, 0) + c
    return out


def prime_square_series(table: WeightTable, primes: list[int]) -> dict[int, int]:
    """k = p^6 v^2 -> multiplicity, accumulated over the prime window."""
    out: dict[int, int] = {}
    for p in primes:
        p6 = p**6
        for v, c in zip(table.support.tolist(), table.counts.tolist()):
            k = p6 * v * v
            out[k] = out.get(k, 0) + c
    return out


def convolve_series(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = ka + kb
            out[k] = out.get(k, 0) + ca * cb
    return out


@dataclass
class RnEvaluator:
    """Caches the two self-convolved series so many n are cheap."""

    table_a: WeightTable
    table_b: WeightTable
    primes: list[int]
    aa: dict[int, int] = field(init=False, repr=False)
    bb: dict[int, int] = field(init=False, repr=False)

    def __post_init__(self):
        a = square_series(self.table_a)
        b = prime_square_series(self.table_b, self.primes)
        self.aa = convolve_series(a, a)
        self.bb = convolve_series(b, b)

    def __call__(self, n: int) -> int:
        return sum(cb * self.aa.get(n - kb, 0) for kb, cb in self.bb.items())

    @property
    def max_n(self) -> int:
        if not self.aa or not self.bb:
            return 0
        return max(self.aa) + max(self.bb)

    @property
    def total(self) -> int:
        """sum_n R(n) = (a total)^2 * (|primes| b total)^2."""
        return sum(self.aa.values()) * sum(self.bb.values())


def exact_Rn(n: int, table_a: WeightTable, table_b: WeightTable, primes: list[int]) -> int:
    return RnEvaluator(table_a, table_b, primes)(n)


def rn_dense_dft(
    table_a: WeightTable, table_b: WeightTable, primes: list[int], budget_entries: int = 1 << 24
) -> np.ndarray:
    """All R(n) at once via rounded real FFT over the dense index range.

    Exact as long as the rounding margin holds: the worst-case accumulated
    float error is ~ L * eps * (sum a)^2 (sum b)^2, checked against 0.49
    before rounding is trusted.
    """
    a = square_series(table_a)
    b = prime_square_series(table_b, primes)
    if not a or not b:
        return np.zeros(1, dtype=np.int64)
    top = 2 * max(a) + 2 * max(b)
    L = 1 << (top + 1).bit_length()
    if L > budget_entries:
        raise CapacityError(f"dense DFT needs {L} entries > budget {budget_entries}")
    da = np.zeros(L, dtype=np.float64)
    for k, c in a.items():
        da[k] = c
    db = np.zeros(L, dtype=np.float64)
    for k, c in b.items():
        db[k] = c
    mass = float(sum(a.values())) ** 2 * float(sum(b.values())) ** 2
    margin = L * np.finfo(np.float64).eps * mass
    if margin > 0.49:
        raise CapacityError(f"float rounding margin {margin:.3g} too large for exact recovery")
    fa = np.fft.rfft(da)
    fb = np.fft.rfft(db)
    out = np.fft.irfft(fa * fa * fb * fb, n=L)
    return np.rint(out[: top + 1]).astype(np.int64)


# -- singular integral ----------------------------------------------------------


@lru_cache(maxsize=200_000)
def _conv4_cached(
    n: int, p1: int, p2: int, C1: int, C2: int, C3: int, C4: int, t: tuple
) -> float:
    H1, H2, P = t
    slots = (
        scaled_slot(H1, H2, float(C1), p1),
        scaled_slot(H1, H2, float(C2), p2),
        plain_slot(P / 2.0, P, float(C3)),
        plain_slot(P / 2.0, P, float(C4)),
    )
    return conv4_value(slots, float(n))


def _pair_conv(sa: KernelSlot, sb: KernelSlot, u: np.ndarray, order: int = 24) -> np.ndarray:
    """(B_a * B_b)(u) on an array of points, each a smooth 1D integral."""
    lo = np.maximum(sa.gamma_lo, u - sb.gamma_hi)
    hi = np.minimum(sa.gamma_hi, u - sb.gamma_lo)
    span = np.maximum(hi - lo, 0.0)
    x, w = _panel_rule(0.0, 1.0, 1, order)
    g = lo[None, :] + span[None, :] * x[:, None]
    gb = np.maximum(u[None, :] - g, sb.gamma_lo)  # clamp float dust at the edge
    vals = sa.density(np.maximum(g, sa.gamma_lo)) * sb.density(gb)
    return np.sum(vals * w[:, None], axis=0) * span


def conv4_value(slots: tuple[KernelSlot, ...], n: float, order: int = 24) -> float:
    """(B1 * B2 * B3 * B4)(n) as int F12(u) F34(n - u) du.

    F12 and F34 are the pair convolutions; they are smooth between known
    breakpoints (where the overlap window changes shape), so the outer
    integral is split there and each piece gets its own Gauss rule.
    """
    s1, s2, s3, s4 = slots
    b12 = [s1.gamma_lo + s2.gamma_lo, s1.gamma_lo + s2.gamma_hi, s1.gamma_hi + s2.gamma_lo, s1.gamma_hi + s2.gamma_hi]
    b34 = [s3.gamma_lo + s4.gamma_lo, s3.gamma_lo + s4.gamma_hi, s3.gamma_hi + s4.gamma_lo, s3.gamma_hi + s4.gamma_hi]
    u_lo = max(min(b12), n - max(b34))
    u_hi = min(max(b12), n - min(b34))
    if u_hi <= u_lo:
        return 0.0
    cuts = sorted({u_lo, u_hi, *(b for b in b12 if u_lo < b < u_hi), *(n - b for b in b34 if u_lo < n - b < u_hi)})
    total = 0.0
    for a, b in zip(cuts[:-1], cuts[1:]):
        u, wu = _panel_rule(a, b, 1, order)
        total += float(np.sum(wu * _pair_conv(s1, s2, u, order) * _pair_conv(s3, s4, n - u, order)))
    return total


def conv4_value_beta(slots: tuple[KernelSlot, ...], n: float, K: float = 40.0, order: int = 16) -> float:
    """Independent route: truncated Fourier inversion over |beta| <= K/n.

    Each slot transform is evaluated on a shared beta grid; the truncation
    tail falls off like K^-3 relatively, so this is a cross-check, not the
    default.
    """
    T = K / n
    glo = sum(s.gamma_lo for s in slots)
    ghi = sum(s.gamma_hi for s in slots)
    rate = max(abs(glo - n), abs(ghi - n), 1.0)
    panels = max(8, int(4.0 * T * rate / order) + 8)
    if panels * order > 200_000:
        raise QuadratureError(f"beta grid would need {panels * order} nodes; n is far outside the support")
    beta, wb = _panel_rule(-T, T, panels, order)
    prod = np.ones_like(beta, dtype=np.complex128)
    for s in slots:
        cycles = T * (s.gamma_hi - s.gamma_lo)
        sp = max(2, int(cycles / 3.0) + 1)
        g, wg = _panel_rule(s.gamma_lo, s.gamma_hi, sp, 16)
        dens = s.density(g) * wg
        prod *= np.exp(2j * np.pi * np.outer(beta, g)) @ dens
    val = np.sum(wb * prod * np.exp(-2j * np.pi * beta * n))
    return float(val.real)


@dataclass
class JEstimate:
    value: float
    stderr: float
    samples: int
    domain: int
    exhaustive: bool
    flagged: bool


def singular_integral_J(
    n: int,
    params: Params,
    primes: list[int],
    seed: int = 2024,
    samples: int = 2000,
    exhaustive_cap: int = 8192,
) -> JEstimate:
    """J(n): kernel four-fold convolution summed over discrete smooth tuples.

    Exhaustive when the tuple domain is small, else uniform Monte Carlo with
    a seeded generator; `flagged` marks estimates whose standard error is
    not well below the value.
    """
    if not primes:
        return JEstimate(0.0, 0.0, 0, 0, True, False)
    s3 = enumerate_smooth(int(math.floor(params.H3)), params.R).members.tolist()
    sp = enumerate_smooth(params.P, params.R).members.tolist()
    if not s3 or not sp:
        return JEstimate(0.0, 0.0, 0, 0, True, False)
    key = (params.H1, params.H2, float(params.P))

    def inner(p1: int, p2: int, C1: int, C2: int, C3: int, C4: int) -> float:
        return _conv4_cached(n, p1, p2, C1, C2, C3, C4, key)

    npairs3 = len(s3) ** 2
    npairsp = len(sp) ** 2
    domain = len(primes) ** 2 * npairs3**2 * npairsp**2
    if domain <= exhaustive_cap:
        pairs3 = _pair_cubes(s3)
        pairsp = _pair_cubes(sp)
        total = 0.0
        for p1 in primes:
            for p2 in primes:
                for C1 in pairs3:
                    for C2 in pairs3:
                        for C3 in pairsp:
                            for C4 in pairsp:
                                total += inner(p1, p2, C1, C2, C3, C4)
        return JEstimate(total, 0.0, domain, domain, True, False)

    rng = np.random.default_rng(seed)
    vals = np.empty(samples, dtype=np.float64)
    cu3 = [v**3 for v in s3]
    cup = [v**3 for v in sp]
    for i in range(samples):
        p1, p2 = (primes[j] for j in rng.integers(0, len(primes), size=2))
        a1, a2, a3, a4 = rng.integers(0, len(s3), size=4)
        b1, b2, b3, b4 = rng.integers(0, len(sp), size=4)
        vals[i] = inner(p1, p2, cu3[a1] + cu3[a2], cu3[a3] + cu3[a4], cup[b1] + cup[b2], cup[b3] + cup[b4])
    mean = float(vals.mean())
    std = float(vals.std(ddof=1)) if samples > 1 else float("inf")
    value = domain * mean
    stderr = domain * std / math.sqrt(samples)
    return JEstimate(value, stderr, samples, domain, False, flagged=stderr > 0.25 * abs(value))


def _pair_cubes(members: list[int]) -> list[int]:
    return [a**3 + b**3 for a in members for b in members]


# -- the report -----------------------------------------------------------------


@dataclass
class MainTermReport:
    n: int
    R_exact: int
    S_trunc: float
    J_est: float
    J_stderr: float
    predicted: float
    ratio: float

    def as_json_dict(self) -> dict:
        return {
            "n": self.n,
            "R_exact": self.R_exact,
            "S_trunc": self.S_trunc,
            "J_est": self.J_est,
            "J_stderr": self.J_stderr,
            "predicted": self.predicted,
            "ratio": self.ratio,
        }


def main_term_report(
    n: int,
    params: Params,
    table_a: WeightTable,
    table_b: WeightTable,
    primes: list[int],
    Q: int = 64,
    seed: int = 2024,
    samples: int = 2000,
    rn: RnEvaluator | None = None,
) -> MainTermReport:
    if rn is None:
        rn = RnEvaluator(table_a, table_b, primes)
    series: SeriesTruncation = truncated_singular_series(n, Q)
    j = singular_integral_J(n, params, primes, seed=seed, samples=samples)
    predicted = series.value * j.value
    r = rn(n)
    ratio = r / predicted if predicted != 0 else math.inf if r else math.nan
    return MainTermReport(
        n=n, R_exact=r, S_trunc=series.value, J_est=j.value, J_stderr=j.stderr,
        predicted=predicted, ratio=ratio,
    )
