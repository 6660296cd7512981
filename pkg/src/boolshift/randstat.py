"""Statistics of the measurement success probability over random functions:
exact brute-force moments, pairing combinatorics, the random-walk mean
distance, reference bounds, and seeded Monte Carlo estimation.

The central random variable is X = [Fhat^(t)(w)]^2 with f and w uniform.
Averaged over all functions its mean is exactly 2^{-n} for every t, and
at t = 2 its variance is exactly 12/2^{3n} - 28/2^{4n} + 16/2^{5n}.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import backend
from .boolfn import BooleanFunction, substream

_BRUTE_FORCE_LIMIT = 3  # 2^{2^n} functions; n=4 only behind slow=True


@dataclass(frozen=True)
class MomentReport:
    n: int
    t: int
    mean: Fraction
    variance: Fraction
    closed_form_variance: Fraction | None


def variance_closed_form(n: int) -> Fraction:
    """Exact t=2 variance: 12/2^{3n} - 28/2^{4n} + 16/2^{5n}."""
    return (
        Fraction(12, 1 << (3 * n))
        - Fraction(28, 1 << (4 * n))
        + Fraction(16, 1 << (5 * n))
    )


def brute_force_moments(n: int, t: int, slow: bool = False) -> MomentReport:
    """Average X and X^2 over every function and uniform w, exactly.

    Enumerates all 2^{2^n} truth tables; n <= 3 unless slow=True admits
    n = 4 (65536 functions).
    """
    limit = 4 if slow else _BRUTE_FORCE_LIMIT
    if not 1 <= n <= limit:
        raise ValueError(
            f"brute force over 2^(2^n) functions needs n <= {limit}, got {n}"
        )
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if n * (t + 1) > 62:
        raise ValueError(f"t={t} overflows the exact int64 transform at n={n}")
    size = 1 << n
    count = 1 << size
    masks = np.arange(count, dtype=np.int64)
    tables = (masks[:, None] >> np.arange(size)) & 1
    signs = (1 - 2 * tables).astype(np.int64)
    u = backend.wht_rows_i64(signs)
    raw = backend.wht_rows_i64(u * u)
    ac = raw // size
    if not (ac * size == raw).all():
        raise AssertionError("autocorrelation numerators are not integral")
    c = backend.wht_rows_i64(ac**t)
    # X = c / 2^{n(t+1)} per (f, w); accumulate exact integer sums
    s1 = int(c.astype(object).sum())
    s2 = int((c.astype(object) ** 2).sum())
    den = 1 << (n * (t + 1))
    mean = Fraction(s1, count * size * den)
    second = Fraction(s2, count * size * den * den)
    variance = second - mean * mean
    closed = variance_closed_form(n) if t == 2 else None
    return MomentReport(n, t, mean, variance, closed)


def pairing_indicator(values) -> int:
    """1 if the elements can be split into equal pairs, else 0.

    A perfect matching into equal pairs exists exactly when every value
    occurs an even number of times.
    """
    items = list(values)
    if len(items) % 2 != 0:
        raise ValueError(f"need an even number of elements, got {len(items)}")
    return int(all(c % 2 == 0 for c in Counter(items).values()))


def walk_expectation(steps: int) -> Fraction:
    """Expected distance of a +-1 random walk after `steps` steps, exact.

    For steps = 2m the closed form is 2m * C(2m, m) / 4^m.
    """
    if steps % 2 != 0 or steps < 2:
        raise ValueError(f"steps must be a positive even integer, got {steps}")
    if steps > 1 << 20:
        raise ValueError(f"steps capped at 2^20 for the exact path, got {steps}")
    half = steps // 2
    return Fraction(steps * math.comb(steps, half), 1 << steps)


def random1_bound(n: int) -> float:
    """Lower bound L(2^n)^2 / 2^n on the one-query expected success
    probability over random functions; at least 1/2 for every n and
    tending to 2/pi.
    """
    if not 1 <= n <= 20:
        raise ValueError(f"n must be in 1..20, got {n}")
    length = walk_expectation(1 << n)
    value = Fraction(length * length, 1 << n)
    if value < Fraction(1, 2):
        raise AssertionError(f"random-walk bound {value} fell below 1/2")
    return float(value)


def random2_bound(n: int) -> float:
    """Headline reference value 1 - (3/64) * 2^{-n} for the two-query
    expected success probability over random functions.

    Exhaustive enumeration at n <= 4 shows the true expectation falls
    below this value (see tests/test_acceptance.py), so treat it as a
    reported constant, not a certified lower bound; the certified chain
    is exposed by :func:`cantelli_chain`.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return 1.0 - (3.0 / 64.0) * 0.5**n


@dataclass(frozen=True)
class CantelliReport:
    n: int
    k: float
    mu: Fraction
    sigma_simplified: float
    sigma2_exact: Fraction
    intermediate: float
    chain_final: float


def cantelli_chain(n: int, k: float | None = None) -> CantelliReport:
    """Evaluate the one-sided deviation chain for the t=2 variable X.

    With mu = 2^{-n} and the simplified sigma = 2^{-3n/2}, the
    Pr(X >= mu - k sigma) >= k^2/(1+k^2) step gives the intermediate
    lower bound 2^n (mu - k sigma) (1 + 1/k^2)^{-2}, which algebraically
    dominates the relaxed final form 1 - k/2^{n/2} - 2/k^2 (asserted).
    Default deviation parameter is k = 2^{n/6}.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if k is None:
        k = 2.0 ** (n / 6.0)
    if k <= 0:
        raise ValueError(f"k must be positive, got {k}")
    mu = Fraction(1, 1 << n)
    sigma = 2.0 ** (-1.5 * n)
    size = float(1 << n)
    intermediate = size * (float(mu) - k * sigma) * (1.0 + 1.0 / (k * k)) ** -2
    chain_final = 1.0 - k / math.sqrt(size) - 2.0 / (k * k)
    if intermediate < chain_final - 1e-12:
        raise AssertionError(
            f"deviation chain inverted: intermediate {intermediate} below "
            f"final {chain_final}"
        )
    return CantelliReport(
        n, k, mu, sigma, variance_closed_form(n), intermediate, chain_final
    )


def expected_success_mc(
    n: int, t: int, samples: int, seed: int, sampler=None
) -> tuple[float, float]:
    """Monte Carlo mean of the t-query success probability over random
    functions, with its standard error.

    Sample i draws its function from PRNG substream (seed, i), so the
    estimate is bitwise reproducible and independent of any batching or
    worker scheduling.  ``sampler``, if given, maps the sample index to a
    BooleanFunction instead (harness hook).
    """
    if samples < 1:
        raise ValueError(f"samples must be >= 1, got {samples}")
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    size = 1 << n
    tables = np.empty((samples, size), dtype=np.float64)
    for i in range(samples):
        if sampler is not None:
            func: BooleanFunction = sampler(i)
            if func.n != n:
                raise ValueError(f"sampler returned n={func.n}, expected {n}")
            bits = func.table
        else:
            bits = substream(seed, i).integers(0, 2, size=size, dtype=np.uint8)
        tables[i] = 1.0 - 2.0 * bits
    probs = backend.success_probs(tables, t)
    estimate = float(probs.mean())
    if samples == 1:
        return estimate, 0.0
    stderr = float(probs.std(ddof=1) / math.sqrt(samples))
    return estimate, stderr
