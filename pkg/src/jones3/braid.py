"""Words in the 3-strand braid group: parsing, serialization, writhe.

Two input grammars are accepted (whitespace-separated tokens):

* prefixed form:      ``s1 s2^-1 s1^3``
* signed-integer form: ``1 -2 1``

Mixing the two forms in one string is rejected. The canonical serializer
emits the prefixed form, one token per letter. No free reduction is ever
performed: the word length is part of the contract.
"""

from __future__ import annotations

import re
from typing import Iterator, NamedTuple


class BraidParseError(ValueError):
    def __init__(self, message: str, token: str, position: int):
        super().__init__(f"{message} (token {token!r} at position {position})")
        self.token = token
        self.position = position


class UnknownGenerator(BraidParseError):
    """Generator index outside {1, 2}."""


class ZeroExponent(BraidParseError):
    """Exponent 0 is not a letter."""


class MalformedToken(BraidParseError):
    """Token matches neither grammar, or mixes grammars."""


class BraidLetter(NamedTuple):
    index: int  # generator index, 1 or 2
    sign: int  # +1 or -1


class BraidWord:
    """Immutable sequence of letters; the empty word is the identity braid."""

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        out = []
        for index, sign in letters:
            if index not in (1, 2):
                raise ValueError(f"generator index must be 1 or 2, got {index}")
            if sign not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {sign}")
            out.append(BraidLetter(index, sign))
        self.letters = tuple(out)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[BraidLetter]:
        return iter(self.letters)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BraidWord):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __repr__(self) -> str:
        return f"BraidWord({to_text(self)!r})"


_PREFIXED = re.compile(r"^s(\d+)(?:\^(-?\d+))?$")
_SIGNED = re.compile(r"^[+-]?\d+$")


def parse_braid(text: str) -> BraidWord:
    """Parse a braid word in either grammar, expanding exponents."""
    letters: list[BraidLetter] = []
    form: str | None = None
    for position, token in enumerate(text.split(), start=1):
        m = _PREFIXED.match(token)
        if m:
            token_form = "prefixed"
            index = int(m.group(1))
            exponent = int(m.group(2)) if m.group(2) is not None else 1
        elif _SIGNED.match(token):
            token_form = "signed"
            value = int(token)
            index = abs(value)
            exponent = 1 if value > 0 else -1
            if value == 0:
                raise UnknownGenerator("0 names no generator", token, position)
        else:
            raise MalformedToken("unrecognized token", token, position)

        if form is None:
            form = token_form
        elif form != token_form:
            raise MalformedToken("mixed prefixed and signed-integer forms", token, position)
        if index not in (1, 2):
            raise UnknownGenerator("the 3-strand braid group has generators 1 and 2 only", token, position)
        if exponent == 0:
            raise ZeroExponent("exponent must be nonzero", token, position)
        sign = 1 if exponent > 0 else -1
        letters.extend(BraidLetter(index, sign) for _ in range(abs(exponent)))
    return BraidWord(letters)


def to_text(word: BraidWord) -> str:
    """Canonical serialization: prefixed form, one token per letter."""
    return " ".join(f"s{j}" if s > 0 else f"s{j}^-1" for j, s in word)


def writhe(word: BraidWord) -> int:
    """Sum of the letter signs (crossing signs of the closed diagram)."""
    return sum(letter.sign for letter in word)


def inverse(word: BraidWord) -> BraidWord:
    """Reverse the word and flip every sign."""
    return BraidWord(BraidLetter(j, -s) for j, s in reversed(word.letters))


def conjugate(word: BraidWord, by: BraidWord) -> BraidWord:
    """Return by . word . by^-1."""
    return BraidWord(by.letters + word.letters + inverse(by).letters)
