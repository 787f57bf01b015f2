import cmath
import math
import random

import numpy as np
import pytest

from jones3 import _kernels
from jones3.braid import BraidWord, conjugate, parse_braid
from jones3.rep2 import (
    PHI_MAX,
    OutsideUnitarityRegion,
    classical_3sb,
    compile_gate,
    make_params,
    rep_of_tl3,
)
from jones3.tl3 import U1, U2, jones_exact, jones_rep, markov_trace, tl_mul
from conftest import random_word
from test_tl3 import rand_tl3

EYE = np.eye(2)


def test_params_at_zero():
    p = make_params(0.0)
    assert p.theta == 0.0
    assert p.delta == -2.0
    assert p.alpha == 1.0
    assert np.allclose(p.e2, [-0.5, math.sqrt(3) / 2])
    assert np.allclose(p.G1, EYE - 2 * p.E1)
    assert np.allclose(p.G1 @ p.G1, EYE)  # a reflection
    assert np.allclose(p.G2 @ p.G2, EYE)


def test_params_at_boundary():
    with pytest.warns(RuntimeWarning):
        p = make_params(PHI_MAX)
    assert abs(p.delta + 1.0) < 1e-12
    # cos(pi/3) is off by one ulp, so the residual direction is ~sqrt(eps)
    assert np.allclose(p.e2, [-1.0, 0.0], atol=1e-7)
    assert np.allclose(p.E1, p.E2, atol=1e-7)


def test_params_outside_region():
    with pytest.raises(OutsideUnitarityRegion):
        make_params(math.pi)
    with pytest.raises(OutsideUnitarityRegion):
        make_params(-math.pi)


def test_projector_invariants():
    rng = random.Random(5)
    for _ in range(25):
        p = make_params(rng.uniform(-PHI_MAX * 0.999, PHI_MAX * 0.999))
        for E in (p.E1, p.E2):
            assert np.allclose(E @ E, E, atol=1e-12)
            assert np.allclose(E, E.conj().T, atol=1e-12)
            assert abs(np.trace(E) - 1) < 1e-12
        assert abs(np.trace(p.E1 @ p.E2) - p.delta**-2) < 1e-12
        assert abs(p.e1 @ p.e2 - 1 / p.delta) < 1e-12
        for G in (p.G1, p.G2, p.G1inv, p.G2inv):
            assert np.max(np.abs(G @ G.conj().T - EYE)) < 1e-12
        assert np.max(np.abs(p.G1 @ p.G1inv - EYE)) < 1e-12


def test_compile_empty_word():
    p = make_params(0.7)
    assert np.array_equal(compile_gate(BraidWord(), p), EYE)


def test_compile_inverse_pair():
    p = make_params(0.7)
    U = compile_gate(parse_braid("s1 s1^-1"), p)
    assert np.max(np.abs(U - EYE)) < 1e-12


def test_compile_braid_relation():
    p = make_params(1.1)
    lhs = compile_gate(parse_braid("s1 s2 s1"), p)
    rhs = compile_gate(parse_braid("s2 s1 s2"), p)
    assert np.max(np.abs(lhs - rhs)) < 1e-12


def test_unitarity_over_region(py_rng):
    for _ in range(50):
        phi = py_rng.uniform(-PHI_MAX, PHI_MAX)
        p = make_params(phi)
        word = random_word(py_rng, 60)
        U = compile_gate(word, p)
        assert np.max(np.abs(U @ U.conj().T - EYE)) <= 1e-10


def test_classical_empty_word_at_zero():
    p = make_params(0.0)
    assert abs(classical_3sb(BraidWord(), p) - 4.0) < 1e-12


def test_classical_matches_exact_oracle(py_rng):
    for _ in range(200):
        word = random_word(py_rng, 40)
        phi = py_rng.uniform(-PHI_MAX, PHI_MAX)
        p = make_params(phi)
        exact = jones_exact(word).eval(p.alpha)
        assert abs(classical_3sb(word, p) - exact) <= 1e-9


def test_classical_figure_eight():
    word = parse_braid("s1 s2^-1 s1 s2^-1")
    p = make_params(math.pi / 2)
    expected = jones_exact(word).eval(cmath.exp(-1j * math.pi / 8))
    assert abs(classical_3sb(word, p) - expected) <= 1e-9


def test_classical_conjugation_invariant(py_rng):
    for _ in range(50):
        b = random_word(py_rng, 20)
        g = random_word(py_rng, 10)
        phi = py_rng.uniform(-PHI_MAX, PHI_MAX)
        p = make_params(phi)
        assert abs(classical_3sb(conjugate(b, g), p) - classical_3sb(b, p)) <= 1e-9


def test_classical_is_deterministic():
    word = parse_braid("s1 s2 s1^-1 s2 s1")
    p = make_params(0.9)
    assert classical_3sb(word, p) == classical_3sb(word, p)


def test_rep_of_generators():
    p = make_params(0.8)
    assert np.allclose(rep_of_tl3(U1, p), p.delta * p.E1)
    assert abs(np.trace(rep_of_tl3(U1, p)) - p.delta) < 1e-12
    u1u2 = tl_mul(U1, U2)
    assert np.allclose(rep_of_tl3(u1u2, p), p.delta**2 * (p.E1 @ p.E2))
    assert abs(np.trace(rep_of_tl3(u1u2, p)) - 1) < 1e-12


def test_rep_factors_through_compile(py_rng):
    for _ in range(30):
        word = random_word(py_rng, 12)
        phi = py_rng.uniform(-PHI_MAX * 0.999, PHI_MAX * 0.999)
        p = make_params(phi)
        lhs = rep_of_tl3(jones_rep(word), p)
        rhs = compile_gate(word, p)
        assert np.max(np.abs(lhs - rhs)) <= 1e-9


def test_trace_correspondence_amended():
    rng = random.Random(9)
    for _ in range(100):
        x = rand_tl3(rng)
        phi = rng.uniform(-PHI_MAX * 0.999, PHI_MAX * 0.999)
        p = make_params(phi)
        lhs = markov_trace(x).eval(p.alpha)
        rhs = np.trace(rep_of_tl3(x, p)) + (p.delta**2 - 2) * x.one.eval(p.alpha)
        assert abs(lhs - rhs) <= 1e-9 * (1 + abs(lhs))


def test_kernel_backends_agree(np_rng):
    mats = np_rng.normal(size=(257, 2, 2)) + 1j * np_rng.normal(size=(257, 2, 2))
    sequential = np.eye(2, dtype=complex)
    for m in mats:
        sequential = sequential @ m
    assert np.allclose(_kernels.chain_product_numpy(mats), sequential, rtol=1e-9)
    if _kernels.HAVE_NUMBA:
        assert np.allclose(_kernels.chain_product_numba(mats), sequential, rtol=1e-9)
    assert np.array_equal(_kernels.chain_product_numpy(mats[:0]), np.eye(2))
