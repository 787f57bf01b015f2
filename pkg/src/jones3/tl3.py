"""Exact computation in the 5-dimensional diagram algebra on three strands.

Elements are stored as Laurent coefficients over the ordered basis
(1, U1, U2, U1U2, U2U1), with the loop weight d eagerly substituted as
-A^2 - A^-2 so that everything lives over a single-variable ring. The
defining relations are U_i^2 = d U_i and U_i U_j U_i = U_i for |i-j| = 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidWord, writhe
from .laurent import A, A_INV, D, ONE, ZERO, LaurentPoly


@dataclass(frozen=True)
class TL3Element:
    one: LaurentPoly
    u1: LaurentPoly
    u2: LaurentPoly
    u1u2: LaurentPoly
    u2u1: LaurentPoly

    def __add__(self, other: "TL3Element") -> "TL3Element":
        return TL3Element(
            self.one + other.one,
            self.u1 + other.u1,
            self.u2 + other.u2,
            self.u1u2 + other.u1u2,
            self.u2u1 + other.u2u1,
        )

    def scale(self, factor: LaurentPoly) -> "TL3Element":
        return TL3Element(
            self.one * factor,
            self.u1 * factor,
            self.u2 * factor,
            self.u1u2 * factor,
            self.u2u1 * factor,
        )


IDENTITY = TL3Element(ONE, ZERO, ZERO, ZERO, ZERO)
U1 = TL3Element(ZERO, ONE, ZERO, ZERO, ZERO)
U2 = TL3Element(ZERO, ZERO, ONE, ZERO, ZERO)


def _times_u1(x: TL3Element) -> TL3Element:
    # Right multiplication by U1, basis by basis:
    # 1.U1 = U1, U1.U1 = d U1, U2.U1 = U2U1, (U1U2).U1 = U1, (U2U1).U1 = d U2U1
    return TL3Element(
        ZERO,
        x.one + x.u1 * D + x.u1u2,
        ZERO,
        ZERO,
        x.u2 + x.u2u1 * D,
    )


def _times_u2(x: TL3Element) -> TL3Element:
    # 1.U2 = U2, U1.U2 = U1U2, U2.U2 = d U2, (U1U2).U2 = d U1U2, (U2U1).U2 = U2
    return TL3Element(
        ZERO,
        ZERO,
        x.one + x.u2 * D + x.u2u1,
        x.u1 + x.u1u2 * D,
        ZERO,
    )


def _times_gen(x: TL3Element, index: int) -> TL3Element:
    return _times_u1(x) if index == 1 else _times_u2(x)


def tl_mul(x: TL3Element, y: TL3Element) -> TL3Element:
    """Bilinear product x . y determined by the generator relations."""
    xu1 = _times_u1(x)
    xu2 = _times_u2(x)
    return (
        x.scale(y.one)
        + xu1.scale(y.u1)
        + xu2.scale(y.u2)
        + _times_u2(xu1).scale(y.u1u2)
        + _times_u1(xu2).scale(y.u2u1)
    )


def jones_rep(word: BraidWord) -> TL3Element:
    """Image of the braid word under b_j -> A 1 + A^-1 U_j (inverse letters
    map to A^-1 1 + A U_j), computed by a left-to-right fold."""
    acc = IDENTITY
    for index, sign in word:
        if sign > 0:
            acc = acc.scale(A) + _times_gen(acc, index).scale(A_INV)
        else:
            acc = acc.scale(A_INV) + _times_gen(acc, index).scale(A)
    return acc


def markov_trace(x: TL3Element) -> LaurentPoly:
    """Trace closing each basis diagram into loops and weighting by d^(k-1).

    Closed loop counts: identity -> 3, U1 and U2 -> 2, U1U2 and U2U1 -> 1.
    """
    return x.one * (D * D) + (x.u1 + x.u2) * D + x.u1u2 + x.u2u1


def jones_exact(word: BraidWord) -> LaurentPoly:
    """Exact Jones value of the closure as a Laurent polynomial in A:
    (-A^3)^writhe times the trace of the braid's algebra image."""
    w = writhe(word)
    framing = LaurentPoly.monomial(-1 if w % 2 else 1, 3 * w)
    return framing * markov_trace(jones_rep(word))
