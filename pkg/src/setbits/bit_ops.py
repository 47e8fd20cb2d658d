"""Word-level bit manipulation on 32-bit values.

Unsigned words live in ``[0, 2**32 - 1]`` and signed words in
``[-2**31, 2**31 - 1]``.  Python integers are unbounded, so every function
validates its inputs and masks its outputs to keep the fixed-width
semantics explicit.  Bits are numbered right to left starting at 0.
"""
from __future__ import annotations

from .errors import BitIndexError, DomainError

WORD_BITS = 32
WORD_MASK = (1 << WORD_BITS) - 1
SIGN_BIT = 1 << (WORD_BITS - 1)
INT_MIN = -SIGN_BIT
INT_MAX = SIGN_BIT - 1

REPR_WIDTHS = (8, 16, 32)


def _check_unsigned(x: int) -> None:
    if not 0 <= x <= WORD_MASK:
        raise DomainError(f"unsigned word out of range: {x}")


def _check_signed(x: int) -> None:
    if not INT_MIN <= x <= INT_MAX:
        raise DomainError(f"signed word out of range: {x}")


def _check_magnitude(x: int) -> None:
    # |INT_MIN| has no signed representation
    _check_signed(x)
    if x == INT_MIN:
        raise DomainError(f"absolute value of {x} is not representable")


def _check_shift(k: int) -> None:
    if not 0 <= k < WORD_BITS:
        raise DomainError(f"shift amount must be in [0, {WORD_BITS}), got {k}")


def to_unsigned(x: int) -> int:
    """Reinterpret a signed word as the unsigned word with the same bits."""
    _check_signed(x)
    return x & WORD_MASK


def to_signed(u: int) -> int:
    """Reinterpret an unsigned word as a two's-complement signed word."""
    _check_unsigned(u)
    return u - (1 << WORD_BITS) if u & SIGN_BIT else u


def bit_and(x: int, y: int) -> int:
    _check_unsigned(x)
    _check_unsigned(y)
    return x & y


def bit_or(x: int, y: int) -> int:
    _check_unsigned(x)
    _check_unsigned(y)
    return x | y


def bit_xor(x: int, y: int) -> int:
    _check_unsigned(x)
    _check_unsigned(y)
    return x ^ y


def bit_not(x: int) -> int:
    _check_unsigned(x)
    return ~x & WORD_MASK


def bit_value(x: int, i: int) -> int:
    """Return bit ``i`` (0 or 1) of the two's-complement form of ``x``."""
    _check_signed(x)
    if not 0 <= i < WORD_BITS:
        raise BitIndexError(f"bit index {i} outside [0, {WORD_BITS})")
    return 0 if x & (1 << i) == 0 else 1


def pow2(n: int) -> int:
    """Return ``2**n`` computed by a single left shift."""
    if not 0 <= n < WORD_BITS:
        raise DomainError(f"exponent must be in [0, {WORD_BITS}), got {n}")
    return 1 << n


def div_pow2(x: int, n: int) -> int:
    """Divide ``x`` by ``2**n``, truncating toward zero.

    The sign is stripped, the magnitude shifted right, and the sign restored,
    so negative inputs round toward zero rather than toward minus infinity.
    """
    _check_magnitude(x)
    _check_shift(n)
    s = -1 if x < 0 else 1
    return ((x * s) >> n) * s


def shl(x: int, k: int) -> int:
    """Shift an unsigned word left; bits pushed past the top are lost."""
    _check_unsigned(x)
    _check_shift(k)
    return (x << k) & WORD_MASK


def shr_logical(x: int, k: int) -> int:
    """Shift an unsigned word right, filling the top ``k`` bits with 0."""
    _check_unsigned(x)
    _check_shift(k)
    return x >> k


def shr_arithmetic(x: int, k: int) -> int:
    """Shift a signed word right, filling the top ``k`` bits with the sign bit."""
    _check_signed(x)
    _check_shift(k)
    u = x & WORD_MASK
    shifted = u >> k
    if u & SIGN_BIT:
        shifted |= WORD_MASK ^ (WORD_MASK >> k)
    return to_signed(shifted)


def twos_complement_repr(x: int, width: int = 16) -> str:
    """Return the ``width``-bit two's-complement pattern of ``x``, MSB first.

    >>> twos_complement_repr(-26, 16)
    '1111111111100110'
    """
    if width not in REPR_WIDTHS:
        raise DomainError(f"width must be one of {REPR_WIDTHS}, got {width}")
    lo, hi = -(1 << (width - 1)), (1 << (width - 1)) - 1
    if not lo <= x <= hi:
        raise DomainError(f"{x} is not representable in {width} bits")
    digits = []
    for d in range(width - 1, -1, -1):
        digits.append("1" if x & (1 << d) else "0")
    return "".join(digits)


def from_twos_complement(bits: str) -> int:
    """Inverse of :func:`twos_complement_repr`."""
    if not bits or set(bits) - {"0", "1"}:
        raise DomainError(f"not a binary string: {bits!r}")
    value = int(bits, 2)
    if bits[0] == "1":
        value -= 1 << len(bits)
    return value


def min_binary_repr(x: int) -> str:
    """Binary digits of ``|x|`` without leading zeros, prefixed by ``-`` if negative."""
    _check_magnitude(x)
    sign = "-" if x < 0 else ""
    n = abs(x)
    d = WORD_BITS - 1
    while d > 0 and n & (1 << d) == 0:
        d -= 1
    digits = []
    while d >= 0:
        digits.append("1" if n & (1 << d) else "0")
        d -= 1
    return sign + "".join(digits)


def popcount(x: int) -> int:
    """Count the set bits of ``|x|``."""
    _check_magnitude(x)
    n = abs(x)
    count = 0
    for i in range(WORD_BITS):
        if n & (1 << i):
            count += 1
    return count
