"""Simulated one-ancilla trace estimation and the end-to-end sampled evaluator.

The real-part circuit is (H x I) . ctrl-U . (H x I) on |0>|k>; measuring the
ancilla gives P(0) = 1/2 + Re<k|U|k>/2. The imaginary-part circuit inserts
the phase gate S on the ancilla after the first Hadamard, giving
P(1) - P(0) = Im<k|U|k>. Probabilities are always obtained by applying the
gates to the 4-amplitude state vector; the closed forms live only in tests.

Shot streams are counter-based: every block of draws is keyed by
(seed, circuit, entry, block), so tallies are bit-reproducible no matter
how the blocks are scheduled (JONES3_WORKERS picks the thread count).
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .braid import BraidWord, writhe
from .rep2 import compile_gate, make_params, writhe_phases

_SHOT_BLOCK = 4096
_RE, _IM = 0, 1


class NonUnitaryGate(ValueError):
    """The Hadamard test requires a unitary gate."""


class InvalidPrecision(ValueError):
    """Precision parameters outside their legal ranges."""


_HADAMARD = np.array([[1.0, 1.0], [1.0, -1.0]], dtype=np.complex128) / math.sqrt(2.0)
_PHASE_S = np.array([[1.0, 0.0], [0.0, 1.0j]], dtype=np.complex128)


def _require_unitary(gate: np.ndarray) -> None:
    defect = np.max(np.abs(gate @ gate.conj().T - np.eye(2)))
    if defect > 1e-10:
        raise NonUnitaryGate(f"gate deviates from unitarity by {defect:.3e}")


def pipeline_states(gate: np.ndarray, k: int, imag: bool) -> list[np.ndarray]:
    """States after each gate of the circuit, as (ancilla, qubit) amplitudes.

    Returned arrays have shape (2, 2): axis 0 is the ancilla.
    """
    psi = np.zeros((2, 2), dtype=np.complex128)
    psi[0, k] = 1.0
    states = [psi]
    psi = _HADAMARD @ psi
    states.append(psi)
    if imag:
        psi = _PHASE_S @ psi
        states.append(psi)
    controlled = psi.copy()
    controlled[1] = gate @ psi[1]
    states.append(controlled)
    states.append(_HADAMARD @ controlled)
    return states


def _prob_zero(gate: np.ndarray, k: int, imag: bool) -> float:
    final = pipeline_states(gate, k, imag)[-1]
    return float(np.sum(np.abs(final[0]) ** 2))


def qre_shot(gate: np.ndarray, k: int, rng: np.random.Generator) -> int:
    """One sampled ancilla bit of the real-part circuit on basis state k."""
    _require_unitary(gate)
    return 0 if rng.random() < _prob_zero(gate, k, imag=False) else 1


def qim_shot(gate: np.ndarray, k: int, rng: np.random.Generator) -> int:
    """One sampled ancilla bit of the imaginary-part circuit."""
    _require_unitary(gate)
    return 0 if rng.random() < _prob_zero(gate, k, imag=True) else 1


# --- shot planning -------------------------------------------------------


@dataclass(frozen=True)
class ShotPlan:
    epsilon1: float
    epsilon2: float
    n: int
    bound_mode: str


def shots_for(epsilon1: float, epsilon2: float, bound_mode: str = "paper") -> ShotPlan:
    """Shots per diagonal entry per part for the requested joint guarantee.

    ``paper`` uses n = ceil(ln(4/eps2) / (2 eps1^2)); ``rigorous`` uses the
    two-sided Hoeffding bound for a mean of 2n variables in [-1, 1] scaled
    by 2, union-bounded over the two parts: n = ceil(4 ln(4/eps2) / eps1^2).
    """
    if epsilon1 <= 0:
        raise InvalidPrecision(f"epsilon1 must be positive, got {epsilon1}")
    if not 0 < epsilon2 <= 1:
        raise InvalidPrecision(f"epsilon2 must lie in (0, 1], got {epsilon2}")
    if bound_mode == "paper":
        n = math.ceil(math.log(4.0 / epsilon2) / (2.0 * epsilon1**2))
    elif bound_mode == "rigorous":
        n = math.ceil(4.0 * math.log(4.0 / epsilon2) / epsilon1**2)
    else:
        raise InvalidPrecision(f"bound_mode must be 'paper' or 'rigorous', got {bound_mode!r}")
    return ShotPlan(epsilon1, epsilon2, max(n, 1), bound_mode)


# --- batched, keyed sampling ---------------------------------------------


def _count_zeros(p0: float, n: int, key: tuple[int, int, int]) -> int:
    """Zeros among n Bernoulli draws, tallied in fixed-size keyed blocks."""
    blocks = range(0, n, _SHOT_BLOCK)
    seed, circuit, entry = key
    # Injectively pack the stream coordinates into the 128-bit Philox key.
    base = (seed & 0xFFFFFFFFFFFFFFFF) | (circuit << 64) | (entry << 65)

    def one_block(start: int) -> int:
        rng = np.random.Generator(np.random.Philox(key=base | (start << 66)))
        count = min(_SHOT_BLOCK, n - start)
        return int(np.count_nonzero(rng.random(count) < p0))

    workers = int(os.environ.get("JONES3_WORKERS", "1") or "1")
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return sum(pool.map(one_block, blocks))
    return sum(one_block(start) for start in blocks)


@dataclass(frozen=True)
class TraceEstimate:
    re_estimate: float
    im_estimate: float
    n: int
    seed: int
    shot_counts: dict[str, list[tuple[int, int]]]


def estimate_trace(gate: np.ndarray, n: int, seed: int = 0) -> TraceEstimate:
    """Sampled estimate of tr(gate) from 4n keyed Hadamard-test shots."""
    _require_unitary(gate)
    if n < 1:
        raise InvalidPrecision(f"shot count must be >= 1, got {n}")
    counts: dict[str, list[tuple[int, int]]] = {"re": [], "im": []}
    re_est = 0.0
    im_est = 0.0
    for circuit, name in ((_RE, "re"), (_IM, "im")):
        for k in (0, 1):
            p0 = _prob_zero(gate, k, imag=circuit == _IM)
            zeros = _count_zeros(p0, n, (seed, circuit, k))
            counts[name].append((zeros, n - zeros))
            balance = (2 * zeros - n) / n
            if circuit == _RE:
                re_est += balance
            else:
                im_est -= balance  # P(1) - P(0) carries the imaginary part
    return TraceEstimate(re_est, im_est, n, seed, counts)


def approx_re_trace(gate: np.ndarray, n: int, seed: int = 0) -> float:
    """Normalized (zeros - ones)/n summed over both diagonal entries."""
    _require_unitary(gate)
    total = 0.0
    for k in (0, 1):
        zeros = _count_zeros(_prob_zero(gate, k, imag=False), n, (seed, _RE, k))
        total += (2 * zeros - n) / n
    return total


def approx_im_trace(gate: np.ndarray, n: int, seed: int = 0) -> float:
    """Normalized (ones - zeros)/n summed over both diagonal entries."""
    _require_unitary(gate)
    total = 0.0
    for k in (0, 1):
        zeros = _count_zeros(_prob_zero(gate, k, imag=True), n, (seed, _IM, k))
        total += (n - 2 * zeros) / n
    return total


# --- end-to-end sampled evaluator ----------------------------------------


def quantum_3sb(
    word: BraidWord,
    phi: float,
    epsilon1: float,
    epsilon2: float,
    seed: int = 0,
    bound_mode: str = "paper",
) -> tuple[complex, TraceEstimate]:
    """Sampled Jones value at t = e^{i phi} plus the raw trace estimate.

    The gate product is compiled once (O(L)); each shot is O(1) afterwards,
    so the sampling stage costs O(n) independent of the word length.
    """
    params = make_params(phi)
    gate = compile_gate(word, params)
    plan = shots_for(epsilon1, epsilon2, bound_mode)
    estimate = estimate_trace(gate, plan.n, seed)
    w = writhe(word)
    phase3, phase4 = writhe_phases(params.theta, params.phi, w)
    trace = estimate.re_estimate + 1j * estimate.im_estimate
    value = phase3 * trace + (params.delta**2 - 2.0) * phase4
    return value, estimate
