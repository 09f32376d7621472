"""Words in the Artin generators of the braid group on n strands.

Words are kept free: no braid relations are ever applied, since every
quantity computed downstream (Artin action, Burau matrices) is invariant
under them.  Letters act left to right throughout the package.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


class BraidParseError(ValueError):
    """Braid-word text that cannot be parsed."""


@dataclass(frozen=True)
class BraidWord:
    """A word in the generators s_1 .. s_{n-1} of the braid group B_n.

    Letters are signed generator indices: k stands for s_k and -k for its
    inverse.  The empty word is the identity braid.
    """

    strands: int
    letters: tuple = ()

    def __post_init__(self) -> None:
        if self.strands < 2:
            raise ValueError("a braid group needs at least 2 strands")
        for v in self.letters:
            if v == 0 or abs(v) >= self.strands:
                raise ValueError(
                    f"generator index {v} out of range for {self.strands} strands")

    def __len__(self) -> int:
        return len(self.letters)


_SYMBOLIC = re.compile(r"s(\d+)(\^(-?1))?$")


def parse_braid(text: str, strands: int) -> BraidWord:
    """Parse whitespace-separated tokens, signed ("1 -2") or symbolic ("s2^-1").

    The two syntaxes may be mixed.  The strand count is never inferred from
    the tokens; it must be supplied.
    """
    if strands < 2:
        raise BraidParseError(f"strand count must be at least 2, got {strands}")
    letters = []
    for token in text.split():
        m = _SYMBOLIC.match(token)
        if m:
            value = int(m.group(1))
            if m.group(3) == "-1":
                value = -value
        else:
            try:
                value = int(token)
            except ValueError:
                raise BraidParseError(f"malformed generator token {token!r}") from None
        if value == 0 or abs(value) >= strands:
            raise BraidParseError(
                f"generator index {value} out of range for {strands} strands")
        letters.append(value)
    return BraidWord(strands, tuple(letters))


def render_braid(w: BraidWord) -> str:
    """Canonical text form: signed generator indices separated by spaces."""
    return " ".join(str(v) for v in w.letters)


def compose(a: BraidWord, b: BraidWord) -> BraidWord:
    """Concatenation; the letters of a act first."""
    if a.strands != b.strands:
        raise ValueError(
            f"strand-count mismatch: {a.strands} vs {b.strands}")
    return BraidWord(a.strands, a.letters + b.letters)


def inverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(-v for v in reversed(w.letters)))


def exponent_sum(w: BraidWord) -> int:
    """Algebraic sum of the generator exponents of the word."""
    return sum(1 if v > 0 else -1 for v in w.letters)


def permutation(w: BraidWord) -> tuple:
    """Underlying permutation as the tuple (mu_1, ..., mu_n) of strand images.

    Each letter s_k^(+-1) contributes the transposition (k, k+1); letters are
    applied in word order, so permutation(compose(a, b)) maps i to
    permutation(b)[permutation(a)[i]].
    """
    mu = list(range(1, w.strands + 1))
    for v in w.letters:
        k = abs(v)
        for i in range(w.strands):
            if mu[i] == k:
                mu[i] = k + 1
            elif mu[i] == k + 1:
                mu[i] = k
    return tuple(mu)
