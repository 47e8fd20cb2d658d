"""Subsets of {1, ..., n} (n <= 32) stored in one machine word.

Element ``i`` is present iff bit ``i - 1`` of the code is set, so a set's
code is the sum of ``2**(i - 1)`` over its elements.
"""
from __future__ import annotations

from collections.abc import Iterable

from .bit_ops import WORD_BITS
from .errors import (
    CodeRangeError,
    ElementRangeError,
    UniverseMismatchError,
    UniverseSizeError,
)


def _check_universe(n: int) -> None:
    if not 1 <= n <= WORD_BITS:
        raise UniverseSizeError(f"universe size must be in [1, {WORD_BITS}], got {n}")


def format_elements(elements: Iterable[int]) -> str:
    """Canonical text form: ``{2,4,5}``, or ``{}`` for the empty set."""
    return "{" + ",".join(str(e) for e in elements) + "}"


class SmallSet:
    """An immutable subset of ``{1, ..., universe_size}``.

    Operators follow the set-class notation: ``A * B`` intersection,
    ``A + B`` union, ``A + k`` / ``k + A`` insertion, ``A - k`` removal,
    ``A - B`` difference, ``A >= B`` / ``A <= B`` inclusive containment,
    ``A == B`` / ``A != B`` equality and ``k in A`` membership.
    """

    __slots__ = ("_code", "_n")

    def __init__(self, code: int, universe_size: int) -> None:
        _check_universe(universe_size)
        if not 0 <= code < (1 << universe_size):
            raise CodeRangeError(
                f"code {code} outside [0, 2**{universe_size} - 1]"
            )
        self._code = code
        self._n = universe_size

    # -- construction -----------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> SmallSet:
        return cls(0, n)

    @classmethod
    def from_code(cls, k: int, n: int) -> SmallSet:
        return cls(k, n)

    @classmethod
    def full(cls, n: int) -> SmallSet:
        _check_universe(n)
        # 2**n - 1 built without ever forming 2**n, so it fits a 32-bit word
        return cls(((1 << (n - 1)) - 1) * 2 + 1, n)

    @classmethod
    def singleton(cls, a: int, n: int) -> SmallSet:
        _check_universe(n)
        _check_element(a, n)
        return cls(1 << (a - 1), n)

    @classmethod
    def encode(cls, elements: Iterable[int], n: int) -> SmallSet:
        _check_universe(n)
        code = 0
        for e in elements:
            _check_element(e, n)
            code |= 1 << (e - 1)
        return cls(code, n)

    # -- accessors --------------------------------------------------------

    @property
    def code(self) -> int:
        return self._code

    @property
    def universe_size(self) -> int:
        return self._n

    def decode(self) -> tuple[int, ...]:
        """Elements in ascending order."""
        out = []
        code, i = self._code, 1
        while code:
            if code & 1:
                out.append(i)
            code >>= 1
            i += 1
        return tuple(out)

    def cardinality(self) -> int:
        return self._code.bit_count()

    def member(self, k: int) -> bool:
        _check_element(k, self._n)
        return self._code & (1 << (k - 1)) != 0

    # -- set algebra ------------------------------------------------------

    def _same_universe(self, other: SmallSet) -> None:
        if self._n != other._n:
            raise UniverseMismatchError(
                f"universe sizes differ: {self._n} vs {other._n}"
            )

    def intersect(self, other: SmallSet) -> SmallSet:
        self._same_universe(other)
        return SmallSet(self._code & other._code, self._n)

    def union(self, other: SmallSet) -> SmallSet:
        self._same_universe(other)
        return SmallSet(self._code | other._code, self._n)

    def insert(self, k: int) -> SmallSet:
        _check_element(k, self._n)
        return SmallSet(self._code | (1 << (k - 1)), self._n)

    def remove(self, k: int) -> SmallSet:
        _check_element(k, self._n)
        temp = self._code ^ (1 << (k - 1))
        return SmallSet(self._code & temp, self._n)

    def difference(self, other: SmallSet) -> SmallSet:
        self._same_universe(other)
        temp = self._code ^ other._code
        return SmallSet(self._code & temp, self._n)

    def complement(self) -> SmallSet:
        return SmallSet(((1 << self._n) - 1) ^ self._code, self._n)

    def is_superset(self, other: SmallSet) -> bool:
        self._same_universe(other)
        return (self._code | other._code) == self._code

    def is_subset(self, other: SmallSet) -> bool:
        self._same_universe(other)
        return (self._code | other._code) == other._code

    def equals(self, other: SmallSet) -> bool:
        self._same_universe(other)
        return (self._code ^ other._code) == 0

    # -- operator notation ------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, SmallSet):
            return self.intersect(other)
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, SmallSet):
            return self.union(other)
        if isinstance(other, int) and not isinstance(other, bool):
            return self.insert(other)
        return NotImplemented

    def __radd__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return self.insert(other)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, SmallSet):
            return self.difference(other)
        if isinstance(other, int) and not isinstance(other, bool):
            return self.remove(other)
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, SmallSet):
            return self.is_superset(other)
        return NotImplemented

    def __le__(self, other):
        if isinstance(other, SmallSet):
            return self.is_subset(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, SmallSet):
            return self.equals(other)
        return NotImplemented

    def __ne__(self, other):
        if isinstance(other, SmallSet):
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
        return f"SmallSet({self.code}, universe_size={self._n})"


def _check_element(k: int, n: int) -> None:
    if not 1 <= k <= n:
        raise ElementRangeError(f"element {k} outside universe [1, {n}]")
