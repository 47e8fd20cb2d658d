"""Subsets of {1, ..., m} for any m >= 1, stored as a tuple of 32-bit words.

Word ``t`` holds elements ``32*t + 1`` through ``32*t + 32``; element ``i``
sits at bit ``(i - 1) % 32`` of word ``(i - 1) // 32``.  Bits past element
``m`` in the last word are always zero.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence

from .bit_ops import WORD_BITS, WORD_MASK
from .errors import (
    CodeRangeError,
    ConversionError,
    ElementRangeError,
    UniverseMismatchError,
    UniverseSizeError,
)
from .small_set import SmallSet, format_elements


def word_count(m: int) -> int:
    """Number of words needed for a universe of ``m`` elements (ceil(m / 32))."""
    if m < 1:
        raise UniverseSizeError(f"universe size must be >= 1, got {m}")
    return (m + WORD_BITS - 1) // WORD_BITS


def _last_word_mask(m: int) -> int:
    r = m % WORD_BITS
    return WORD_MASK if r == 0 else (1 << r) - 1


def _locate(k: int, m: int) -> tuple[int, int]:
    if not 1 <= k <= m:
        raise ElementRangeError(f"element {k} outside universe [1, {m}]")
    return divmod(k - 1, WORD_BITS)


class BigSet:
    """An immutable subset of ``{1, ..., universe_size}`` of any size.

    Supports the same operations and operator notation as :class:`SmallSet`;
    each binary operation is applied word by word.
    """

    __slots__ = ("_words", "_m")

    def __init__(self, words: Sequence[int], universe_size: int) -> None:
        count = word_count(universe_size)
        words = tuple(words)
        if len(words) != count:
            raise CodeRangeError(
                f"universe {universe_size} needs {count} words, got {len(words)}"
            )
        for w in words:
            if not 0 <= w <= WORD_MASK:
                raise CodeRangeError(f"word {w} is not a 32-bit unsigned value")
        if words[-1] & ~_last_word_mask(universe_size):
            raise CodeRangeError(f"bits set beyond element {universe_size}")
        self._words = words
        self._m = universe_size

    @classmethod
    def _raw(cls, words: tuple[int, ...], m: int) -> BigSet:
        # internal constructor for results already known to be valid
        obj = object.__new__(cls)
        obj._words = words
        obj._m = m
        return obj

    # -- construction -----------------------------------------------------

    @classmethod
    def empty(cls, m: int) -> BigSet:
        return cls._raw((0,) * word_count(m), m)

    @classmethod
    def full(cls, m: int) -> BigSet:
        count = word_count(m)
        return cls._raw((WORD_MASK,) * (count - 1) + (_last_word_mask(m),), m)

    @classmethod
    def singleton(cls, a: int, m: int) -> BigSet:
        words = [0] * word_count(m)
        t, b = _locate(a, m)
        words[t] = 1 << b
        return cls._raw(tuple(words), m)

    @classmethod
    def encode(cls, elements: Iterable[int], m: int) -> BigSet:
        words = [0] * word_count(m)
        for e in elements:
            t, b = _locate(e, m)
            words[t] |= 1 << b
        return cls._raw(tuple(words), m)

    @classmethod
    def from_code(cls, k: int, m: int) -> BigSet:
        """Build from the integer ``sum(words[t] * 2**(32*t))``."""
        count = word_count(m)
        if not 0 <= k < (1 << m):
            raise CodeRangeError(f"code {k} outside [0, 2**{m} - 1]")
        return cls._raw(
            tuple((k >> (WORD_BITS * t)) & WORD_MASK for t in range(count)), m
        )

    @classmethod
    def from_words(cls, words: Sequence[int], m: int) -> BigSet:
        return cls(words, m)

    @classmethod
    def from_hex(cls, text: str, m: int) -> BigSet:
        """Parse the ``w0:w1:...`` hexadecimal word-list form."""
        try:
            words = [int(part, 16) for part in text.split(":")]
        except ValueError:
            raise CodeRangeError(f"malformed word list: {text!r}") from None
        return cls(words, m)

    @classmethod
    def from_small(cls, s: SmallSet) -> BigSet:
        return cls._raw((s.code,), s.universe_size)

    def to_small(self) -> SmallSet:
        if self._m > WORD_BITS:
            raise ConversionError(
                f"universe size {self._m} does not fit a single {WORD_BITS}-bit word"
            )
        return SmallSet(self._words[0], self._m)

    # -- accessors --------------------------------------------------------

    @property
    def universe_size(self) -> int:
        return self._m

    @property
    def words(self) -> tuple[int, ...]:
        return self._words

    @property
    def code(self) -> int:
        total = 0
        for t, w in enumerate(self._words):
            total |= w << (WORD_BITS * t)
        return total

    def to_hex(self) -> str:
        return ":".join(f"{w:08x}" for w in self._words)

    def decode(self) -> tuple[int, ...]:
        out = []
        for t, w in enumerate(self._words):
            base = WORD_BITS * t + 1
            i = 0
            while w:
                if w & 1:
                    out.append(base + i)
                w >>= 1
                i += 1
        return tuple(out)

    def cardinality(self) -> int:
        return sum(w.bit_count() for w in self._words)

    def member(self, k: int) -> bool:
        t, b = _locate(k, self._m)
        return self._words[t] & (1 << b) != 0

    # -- set algebra ------------------------------------------------------

    def _same_universe(self, other: BigSet) -> None:
        if self._m != other._m:
            raise UniverseMismatchError(
                f"universe sizes differ: {self._m} vs {other._m}"
            )

    def intersect(self, other: BigSet) -> BigSet:
        self._same_universe(other)
        return BigSet._raw(
            tuple(x & y for x, y in zip(self._words, other._words)), self._m
        )

    def union(self, other: BigSet) -> BigSet:
        self._same_universe(other)
        return BigSet._raw(
            tuple(x | y for x, y in zip(self._words, other._words)), self._m
        )

    def difference(self, other: BigSet) -> BigSet:
        self._same_universe(other)
        return BigSet._raw(
            tuple(x & (x ^ y) for x, y in zip(self._words, other._words)), self._m
        )

    def insert(self, k: int) -> BigSet:
        t, b = _locate(k, self._m)
        words = list(self._words)
        words[t] |= 1 << b
        return BigSet._raw(tuple(words), self._m)

    def remove(self, k: int) -> BigSet:
        t, b = _locate(k, self._m)
        words = list(self._words)
        words[t] &= words[t] ^ (1 << b)
        return BigSet._raw(tuple(words), self._m)

    def complement(self) -> BigSet:
        words = [w ^ WORD_MASK for w in self._words]
        words[-1] &= _last_word_mask(self._m)
        return BigSet._raw(tuple(words), self._m)

    def is_superset(self, other: BigSet) -> bool:
        self._same_universe(other)
        return all((x | y) == x for x, y in zip(self._words, other._words))

    def is_subset(self, other: BigSet) -> bool:
        self._same_universe(other)
        return all((x | y) == y for x, y in zip(self._words, other._words))

    def equals(self, other: BigSet) -> bool:
        self._same_universe(other)
        return all((x ^ y) == 0 for x, y in zip(self._words, other._words))

    # -- operator notation ------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, BigSet):
            return self.intersect(other)
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, BigSet):
            return self.union(other)
        if isinstance(other, int) and not isinstance(other, bool):
            return self.insert(other)
        return NotImplemented

    def __radd__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return self.insert(other)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, BigSet):
            return self.difference(other)
        if isinstance(other, int) and not isinstance(other, bool):
            return self.remove(other)
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, BigSet):
            return self.is_superset(other)
        return NotImplemented

    def __le__(self, other):
        if isinstance(other, BigSet):
            return self.is_subset(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, BigSet):
            return self.equals(other)
        return NotImplemented

    def __ne__(self, other):
        if isinstance(other, BigSet):
            return not self.equals(other)
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __contains__(self, k: int) -> bool:
        return self.member(k)

    def __len__(self) -> int:
        return self.cardinality()

    def __str__(self) -> str:
        return format_elements(self.decode())

    def __repr__(self) -> str:
        return f"BigSet.from_hex({self.to_hex()!r}, {self._m})"
