"""Catalan sequences: validation, enumeration, ranking and uniform sampling.

A Catalan sequence is a binary word of length 2n containing n zeros and
n ones in which no prefix holds more ones than zeros.  Every other object
family in this package round-trips through this form, so the string of
'0'/'1' characters doubles as the universal interchange format.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

#: Largest semilength `enumerate_sequences` materializes by default.
#: C_16 is about 35 million words; anything above that must go through
#: rank/unrank, which only need the ballot-number table.
ENUMERATION_CAP = 16


class CatalanError(ValueError):
    """Base class for every error raised by this package."""


class OddLengthError(CatalanError):
    """The word has odd length, so it cannot balance zeros and ones."""


class PrefixViolationError(CatalanError):
    """Some prefix holds more ones than zeros.

    ``position`` is the 1-based length of the first offending prefix.
    """

    def __init__(self, position: int):
        super().__init__(f"ones exceed zeros in the prefix of length {position}")
        self.position = position


class CountMismatchError(CatalanError):
    """The word ends with unequal totals of zeros and ones."""


class InvalidSymbolError(CatalanError):
    """The word contains a character other than '0' or '1'."""

    def __init__(self, position: int, symbol: str):
        super().__init__(f"invalid symbol {symbol!r} at position {position}")
        self.position = position


class CapExceededError(CatalanError):
    """Enumeration was requested above the configured cap."""


class IndexOutOfRangeError(CatalanError):
    """unrank index k is outside [0, C_n)."""


class ParseError(CatalanError):
    """A family text form failed to parse.  ``position`` is 1-based."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (position {position})"
        super().__init__(message)
        self.position = position


class DomainError(CatalanError):
    """A valid sequence lies outside the image of a partial codec."""


@dataclass(frozen=True)
class CatalanSequence:
    """A validated Catalan sequence.

    Construction enforces both defining conditions, so any instance in
    flight is valid: equal totals of zeros and ones, and no prefix with
    more ones than zeros.  The empty word is the unique valid sequence
    of semilength 0.

    >>> CatalanSequence("001011").semilength
    3
    >>> CatalanSequence("0110")
    Traceback (most recent call last):
        ...
    catseq.core.PrefixViolationError: ones exceed zeros in the prefix of length 3
    """

    bits: str

    def __post_init__(self):
        bits = self.bits
        if len(bits) % 2:
            raise OddLengthError(f"length {len(bits)} is odd")
        balance = 0
        for i, ch in enumerate(bits):
            if ch == "0":
                balance += 1
            elif ch == "1":
                balance -= 1
            else:
                raise InvalidSymbolError(i + 1, ch)
            if balance < 0:
                raise PrefixViolationError(i + 1)
        if balance != 0:
            ones = (len(bits) - balance) // 2
            raise CountMismatchError(f"{ones} ones vs {len(bits) - ones} zeros")

    @property
    def semilength(self) -> int:
        return len(self.bits) // 2

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return self.bits

    def __iter__(self):
        return iter(self.bits)


@dataclass(frozen=True)
class AltitudeProfile:
    """Running balance (#0 - #1) along a sequence, one entry per prefix.

    For a sequence of semilength n this holds 2n + 1 heights, starting
    and ending at 0, moving by exactly 1 per step and never dropping
    below 0.  It is the silhouette of the mountain-range rendering.
    """

    heights: tuple[int, ...]

    def __post_init__(self):
        hs = self.heights
        assert hs[0] == 0 and hs[-1] == 0 and min(hs) >= 0
        assert all(abs(b - a) == 1 for a, b in zip(hs, hs[1:]))

    @property
    def peak(self) -> int:
        return max(self.heights)


def validate(bits: str) -> CatalanSequence:
    """Check both Catalan conditions and return the validated sequence.

    Raises OddLengthError, PrefixViolationError (with the 1-based index
    of the first offending prefix), CountMismatchError, or
    InvalidSymbolError for characters outside '0'/'1'.
    """
    return CatalanSequence(bits)


def altitude_profile(s: CatalanSequence) -> AltitudeProfile:
    """Prefix balances of ``s``: heights[i] = #0 - #1 over the first i bits.

    >>> altitude_profile(CatalanSequence("0011")).heights
    (0, 1, 2, 1, 0)
    """
    heights = [0]
    for ch in s.bits:
        heights.append(heights[-1] + (1 if ch == "0" else -1))
    return AltitudeProfile(tuple(heights))


def _generate(n: int):
    # Lexicographic with '0' < '1': emit the '0' branch before the '1' branch.
    word: list[str] = []

    def grow(zeros: int, ones: int):
        if zeros == n and ones == n:
            yield "".join(word)
            return
        if zeros < n:
            word.append("0")
            yield from grow(zeros + 1, ones)
            word.pop()
        if ones < zeros:
            word.append("1")
            yield from grow(zeros, ones + 1)
            word.pop()

    yield from grow(0, 0)


def enumerate_sequences(n: int, cap: int = ENUMERATION_CAP) -> list[CatalanSequence]:
    """All C_n Catalan sequences of semilength n, lexicographically ascending.

    >>> [s.bits for s in enumerate_sequences(2)]
    ['0011', '0101']
    """
    if n < 0:
        raise CatalanError("semilength must be nonnegative")
    if n > cap:
        raise CapExceededError(f"semilength {n} exceeds the enumeration cap {cap}")
    return [CatalanSequence(w) for w in _generate(n)]


@lru_cache(maxsize=None)
def _ballot_table(length: int) -> tuple[tuple[int, ...], ...]:
    """table[r][b] = number of valid completions with r symbols remaining
    and a current zeros-minus-ones balance of b.  Exact integers throughout."""
    table = [[0] * (length + 2) for _ in range(length + 1)]
    table[0][0] = 1
    for r in range(1, length + 1):
        for b in range(r + 1):
            ways = table[r - 1][b + 1]  # place '0': balance rises
            if b > 0:
                ways += table[r - 1][b - 1]  # place '1': balance falls
            table[r][b] = ways
    return tuple(tuple(row) for row in table)


def sequence_count(n: int) -> int:
    """C_n read off the ballot-number table (no list materialized)."""
    if n < 0:
        raise CatalanError("semilength must be nonnegative")
    return _ballot_table(2 * n)[2 * n][0]


def rank(s: CatalanSequence) -> int:
    """0-based position of ``s`` within ``enumerate_sequences(s.semilength)``.

    Computed from the ballot-number table: every '1' is charged with the
    count of valid words that branch off with a '0' at that position.
    """
    table = _ballot_table(len(s.bits))
    remaining = len(s.bits)
    balance = 0
    position = 0
    for ch in s.bits:
        if ch == "1":
            position += table[remaining - 1][balance + 1]
            balance -= 1
        else:
            balance += 1
        remaining -= 1
    return position


def unrank(n: int, k: int) -> CatalanSequence:
    """The k-th sequence of semilength n in lexicographic order; inverse of rank.

    Raises IndexOutOfRangeError unless 0 <= k < C_n.
    """
    if n < 0:
        raise CatalanError("semilength must be nonnegative")
    table = _ballot_table(2 * n)
    total = table[2 * n][0]
    if not 0 <= k < total:
        raise IndexOutOfRangeError(f"index {k} outside [0, {total}) for semilength {n}")
    bits = []
    balance = 0
    for remaining in range(2 * n, 0, -1):
        with_zero = table[remaining - 1][balance + 1]
        if k < with_zero:
            bits.append("0")
            balance += 1
        else:
            k -= with_zero
            bits.append("1")
            balance -= 1
    return CatalanSequence("".join(bits))


def random_uniform(n: int, seed: int) -> CatalanSequence:
    """A uniformly random sequence of semilength n, deterministic in (n, seed)."""
    index = random.Random(seed).randrange(sequence_count(n))
    return unrank(n, index)
