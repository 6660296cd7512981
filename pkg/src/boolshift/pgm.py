"""Measurement-based shift recovery: t-fold phase states, the orthogonal
measurement built from them, success probabilities, and seeded sampling.

The t-query state for hidden shift s is

    |Phi^t(s)> = sum_w (-1)^{s.w} |Phi_w> |w>,

where the (t-1)-register block |Phi_w> has amplitude
Fhat(y_1)...Fhat(y_{t-1}) Fhat(w XOR y_1 XOR ... XOR y_{t-1}) on basis
label (y_1, ..., y_{t-1}) and norm Fhat^(t)(w).  The measurement vectors

    |E_s> = 2^{-n/2} sum_{w in supp} (-1)^{w.s} (|Phi_w> / ||Phi_w||) |w>

give outcome probabilities that depend only on d = s XOR s':

    p(s' | s) = (1/2^n) * ( sum_w (-1)^{w.d} Fhat^(t)(w) )^2.

Summed over s' this is exactly 1 (the prepared state lies in the span of
the measurement vectors), so the extra outcome '*' for the orthogonal
complement carries only numerical slack; it is never renormalized away.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from . import backend
from .boolfn import BooleanFunction, shift, signs, substream
from .fourier import signed_numerators, tfold_sq_numerators, tfold_values

INCONCLUSIVE = "*"

_STATE_QUBIT_LIMIT = 22  # full state vectors capped at 2^22 amplitudes


@dataclass(frozen=True)
class PhiState:
    """Flat amplitude vector over basis labels (y_1, ..., y_{t-1}, w).

    The flat index is big-endian in the registers: y_1 occupies the most
    significant n bits and w the least significant n.
    """

    n: int
    t: int
    amplitudes: np.ndarray


@dataclass(frozen=True)
class OutcomeDistribution:
    n: int
    probs: np.ndarray
    p_inconclusive: float


def success_probability(f: BooleanFunction, t: int) -> float:
    """p_f(t) = ( 2^{-n/2} * sum_w Fhat^(t)(w) )^2, in [0, 1]."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    probs = backend.success_probs(signs(f)[None, :].astype(np.float64), t)
    return float(probs[0])


def delta_closed_form(n: int, t: int) -> float:
    """Success probability for a one-point function, in closed form.

    p(t) = (1/2^{2n}) * ( (2^n - 1) sqrt(1 - r^t) + sqrt(1 + (2^n - 1) r^t) )^2
    with r = (2^n - 4)/2^n.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    size = float(1 << n)
    ratio = (size - 4.0) / size
    rt = ratio**t
    total = (size - 1.0) * math.sqrt(max(1.0 - rt, 0.0)) + math.sqrt(
        1.0 + (size - 1.0) * rt
    )
    return total * total / (size * size)


def outcome_distribution(f: BooleanFunction, t: int, s: int) -> OutcomeDistribution:
    """Measurement statistics for hidden shift s via the transform route.

    O(N log N): the displacement profile is the butterfly of Fhat^(t).
    Tiny negative entries (float noise) are clamped to zero and the
    deficit from 1 is reported as the inconclusive probability.
    """
    size = 1 << f.n
    if not 0 <= s < size:
        raise ValueError(f"shift must be in 0..{size - 1}, got {s}")
    fold = tfold_values(f, t)
    m = backend.wht_rows_f64(fold[None, :])[0]
    q = m * m / size
    probs = q[np.arange(size) ^ s]
    np.clip(probs, 0.0, None, out=probs)
    p_inc = 1.0 - probs.sum()
    if p_inc < -1e-9:
        raise AssertionError(f"outcome probabilities sum to {probs.sum()} > 1")
    probs.setflags(write=False)
    return OutcomeDistribution(f.n, probs, max(p_inc, 0.0))


def build_phi_state(f: BooleanFunction, t: int, s: int) -> PhiState:
    """Simulate the preparation circuit and return the full state vector.

    Stage 1 applies (H^n, phase oracle for f_s, H^n) on each of the t
    registers; stage 2 folds the last register to the XOR of all labels
    with a cascade of transversal CNOTs.
    """
    size = 1 << f.n
    if not 0 <= s < size:
        raise ValueError(f"shift must be in 0..{size - 1}, got {s}")
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    if f.n * t > _STATE_QUBIT_LIMIT:
        raise ValueError(
            f"state of {f.n * t} qubits exceeds the {_STATE_QUBIT_LIMIT}-qubit limit"
        )
    phase = signs(shift(f, s)).astype(np.float64)
    state = np.zeros((size,) * t, dtype=np.float64)
    state[(0,) * t] = 1.0
    root = math.sqrt(size)
    for axis in range(t):
        state = _apply_axis_butterfly(state, axis) / root
        shape = [1] * t
        shape[axis] = size
        state = state * phase.reshape(shape)
        state = _apply_axis_butterfly(state, axis) / root
    if t > 1:
        prefix = np.zeros((size,) * (t - 1), dtype=np.intp)
        for axis in range(t - 1):
            shape = [1] * (t - 1)
            shape[axis] = size
            prefix = prefix ^ np.arange(size).reshape(shape)
        gather = prefix[..., None] ^ np.arange(size)
        state = np.take_along_axis(state, gather, axis=-1)
    amps = np.ascontiguousarray(state.reshape(-1))
    amps.setflags(write=False)
    return PhiState(f.n, t, amps)


def _apply_axis_butterfly(state: np.ndarray, axis: int) -> np.ndarray:
    size = state.shape[axis]
    moved = np.moveaxis(state, axis, -1)
    rows = backend.wht_rows_f64(np.ascontiguousarray(moved).reshape(-1, size))
    return np.moveaxis(rows.reshape(moved.shape), -1, axis)


def phi_state_closed_form(f: BooleanFunction, t: int, s: int) -> PhiState:
    """Direct construction of the state from the spectrum (test oracle)."""
    size = 1 << f.n
    if f.n * t > _STATE_QUBIT_LIMIT:
        raise ValueError(
            f"state of {f.n * t} qubits exceeds the {_STATE_QUBIT_LIMIT}-qubit limit"
        )
    fhat = signed_numerators(f).astype(np.float64) / size
    labels = np.arange(size)
    sign_s = 1.0 - 2.0 * (np.bitwise_count(labels & s) & 1).astype(np.float64)
    if t == 1:
        amps = sign_s * fhat
    else:
        block = fhat
        for _ in range(t - 2):
            block = np.multiply.outer(block, fhat)
        prefix = np.zeros((size,) * (t - 1), dtype=np.intp)
        for axis in range(t - 1):
            shape = [1] * (t - 1)
            shape[axis] = size
            prefix = prefix ^ labels.reshape(shape)
        amps = block[..., None] * fhat[prefix[..., None] ^ labels] * sign_s
    amps = np.ascontiguousarray(amps.reshape(-1))
    amps.setflags(write=False)
    return PhiState(f.n, t, amps)


def outcome_distribution_statevector(
    f: BooleanFunction, t: int, s: int
) -> OutcomeDistribution:
    """Measurement statistics from explicit inner products with the state.

    Builds each measurement vector from the normalized |Phi_w> blocks
    (omitting w with exactly zero t-fold coefficient) and projects the
    circuit-simulated state onto it.  Cross-validation route for the
    transform implementation; costs O(2^{n(t+1)}).
    """
    size = 1 << f.n
    phi = build_phi_state(f, t, s).amplitudes
    fhat = signed_numerators(f).astype(np.float64) / size
    labels = np.arange(size)
    support = np.array([int(c) != 0 for c in tfold_sq_numerators(f, t)])
    fold = tfold_values(f, t)
    if t == 1:
        block_of_w = fhat[None, :]  # the |Phi_w> block for t=1 is the scalar Fhat(w)
    else:
        block = fhat
        for _ in range(t - 2):
            block = np.multiply.outer(block, fhat)
        prefix = np.zeros((size,) * (t - 1), dtype=np.intp)
        for axis in range(t - 1):
            shape = [1] * (t - 1)
            shape[axis] = size
            prefix = prefix ^ labels.reshape(shape)
        block_of_w = (
            block[..., None] * fhat[prefix[..., None] ^ labels]
        ).reshape(-1, size)
    probs = np.zeros(size)
    root = math.sqrt(size)
    phi_grid = phi.reshape(-1, size)
    for s_prime in range(size):
        sign_sp = 1.0 - 2.0 * (np.bitwise_count(labels & s_prime) & 1).astype(
            np.float64
        )
        evec = np.zeros_like(phi_grid)
        for w in range(size):
            if support[w]:
                evec[:, w] = sign_sp[w] * block_of_w[:, w] / (fold[w] * root)
        amp = float((evec * phi_grid).sum())
        probs[s_prime] = amp * amp
    p_inc = 1.0 - probs.sum()
    probs.setflags(write=False)
    return OutcomeDistribution(f.n, probs, max(p_inc, 0.0))


def sample_measurement(
    f: BooleanFunction, t: int, s: int, shots: int, seed: int
) -> Counter:
    """Draw i.i.d. measurement outcomes; histogram keys are the shift
    integers plus '*' for the inconclusive outcome.  Deterministic per seed.
    """
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    dist = outcome_distribution(f, t, s)
    pvec = np.append(dist.probs, dist.p_inconclusive)
    edges = np.cumsum(pvec)
    edges /= edges[-1]
    rng = substream(seed, 0)
    draws = np.searchsorted(edges, rng.random(shots), side="right")
    counts = np.bincount(draws, minlength=pvec.size)
    hist: Counter = Counter()
    for outcome in range(dist.probs.size):
        if counts[outcome]:
            hist[outcome] = int(counts[outcome])
    if counts[-1]:
        hist[INCONCLUSIVE] = int(counts[-1])
    return hist
