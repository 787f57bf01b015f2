import random

import numpy as np
import pytest

from jones3.braid import BraidWord

_ALPHABET = [(1, 1), (1, -1), (2, 1), (2, -1)]


def random_word(rng: random.Random, max_len: int, min_len: int = 0) -> BraidWord:
    length = rng.randint(min_len, max_len)
    return BraidWord(rng.choice(_ALPHABET) for _ in range(length))


def random_unitary(rng: np.random.Generator) -> np.ndarray:
    """Haar-ish random 2x2 unitary via QR of a complex Gaussian matrix."""
    z = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


@pytest.fixture
def py_rng() -> random.Random:
    return random.Random(20260824)


@pytest.fixture
def np_rng() -> np.random.Generator:
    return np.random.default_rng(20260824)
