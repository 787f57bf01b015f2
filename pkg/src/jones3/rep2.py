"""Numeric 2x2 representation of 3-braids and the closed-form evaluator.

For an evaluation angle phi (the Jones variable sits at t = e^{i phi}) the
construction uses theta = -phi/4, alpha = e^{i theta} and the real weight
delta = -2 cos(2 theta). Two rank-1 projectors E1, E2 with overlap
tr(E1 E2) = 1/delta^2 generate the elementary gates

    G_j = alpha I + alpha^-1 delta E_j = e^{i theta} I - 2 e^{-i theta} cos(2 theta) E_j,

which are unitary exactly when |phi| <= 2 pi / 3. The trace of the compiled
gate product recovers the Jones value via a writhe-dependent phase and the
correction term (delta^2 - 2) on the identity component (the delta^2 - 2
coefficient is forced by the identity element: closing three strands gives
delta^2 while tr(I) = 2).
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .braid import BraidWord, writhe
from .tl3 import TL3Element

PHI_MAX = 2.0 * math.pi / 3.0


class OutsideUnitarityRegion(ValueError):
    """The representation is undefined for |phi| > 2 pi / 3."""


@dataclass(frozen=True, eq=False)
class RepParams:
    phi: float
    theta: float
    alpha: complex
    delta: float
    e1: np.ndarray
    e2: np.ndarray
    E1: np.ndarray
    E2: np.ndarray
    G1: np.ndarray
    G2: np.ndarray
    G1inv: np.ndarray
    G2inv: np.ndarray


def make_params(phi: float) -> RepParams:
    """Build the full parameter bundle for evaluation angle phi (radians)."""
    if abs(phi) > PHI_MAX + 1e-12:
        raise OutsideUnitarityRegion(
            f"|phi| = {abs(phi):.6g} exceeds 2*pi/3; the 2x2 representation is undefined there"
        )
    theta = -phi / 4.0
    delta = -2.0 * math.cos(2.0 * theta)
    alpha = cmath.exp(1j * theta)

    overlap = 1.0 / delta
    residual = 1.0 - overlap * overlap
    if residual <= 1e-12:
        warnings.warn(
            "phi at the 2*pi/3 boundary: delta = -1 and the two projectors coincide",
            RuntimeWarning,
            stacklevel=2,
        )
    e1 = np.array([1.0, 0.0])
    e2 = np.array([overlap, math.sqrt(max(residual, 0.0))])
    eye = np.eye(2, dtype=np.complex128)
    E1 = np.outer(e1, e1).astype(np.complex128)
    E2 = np.outer(e2, e2).astype(np.complex128)
    G1 = alpha * eye + (delta / alpha) * E1
    G2 = alpha * eye + (delta / alpha) * E2
    G1inv = eye / alpha + (alpha * delta) * E1
    G2inv = eye / alpha + (alpha * delta) * E2
    return RepParams(phi, theta, alpha, delta, e1, e2, E1, E2, G1, G2, G1inv, G2inv)


def _letter_codes(word: BraidWord) -> np.ndarray:
    codes = np.fromiter(
        ((letter.index - 1) + (0 if letter.sign > 0 else 2) for letter in word),
        dtype=np.int64,
        count=len(word),
    )
    return codes


def compile_gate(word: BraidWord, params: RepParams) -> np.ndarray:
    """Ordered product of the elementary gates for each letter of the word."""
    if len(word) == 0:
        return np.eye(2, dtype=np.complex128)
    table = np.stack([params.G1, params.G2, params.G1inv, params.G2inv])
    return _kernels.chain_product(table[_letter_codes(word)])


def writhe_phases(theta: float, phi: float, w: int) -> tuple[complex, complex]:
    """(-alpha^3)^w and (-alpha^4)^w = (-e^{-i phi})^w for integer writhe w."""
    parity = -1.0 if w % 2 else 1.0
    return parity * cmath.exp(3j * theta * w), parity * cmath.exp(-1j * phi * w)


def classical_3sb(word: BraidWord, params: RepParams) -> complex:
    """Deterministic O(L) evaluation of the Jones value at t = e^{i phi}."""
    gate = compile_gate(word, params)
    w = writhe(word)
    phase3, phase4 = writhe_phases(params.theta, params.phi, w)
    trace = gate[0, 0] + gate[1, 1]
    return phase3 * trace + (params.delta**2 - 2.0) * phase4


def rep_of_tl3(x: TL3Element, params: RepParams) -> np.ndarray:
    """Evaluate an exact algebra element to its 2x2 matrix image.

    Basis images: 1 -> I, U_j -> delta E_j, U1U2 -> delta^2 E1 E2,
    U2U1 -> delta^2 E2 E1; coefficients are evaluated at alpha.
    """
    a = params.alpha
    d = params.delta
    return (
        x.one.eval(a) * np.eye(2, dtype=np.complex128)
        + x.u1.eval(a) * d * params.E1
        + x.u2.eval(a) * d * params.E2
        + x.u1u2.eval(a) * d * d * (params.E1 @ params.E2)
        + x.u2u1.eval(a) * d * d * (params.E2 @ params.E1)
    )
