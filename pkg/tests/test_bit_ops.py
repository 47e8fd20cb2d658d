import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from setbits import bit_ops as b
from setbits.errors import BitIndexError, DomainError

signed = st.integers(min_value=b.INT_MIN, max_value=b.INT_MAX)
signed_abs = st.integers(min_value=b.INT_MIN + 1, max_value=b.INT_MAX)
unsigned = st.integers(min_value=0, max_value=b.WORD_MASK)
shift = st.integers(min_value=0, max_value=31)


def trunc_div(x, n):
    return math.trunc(Fraction(x, 2**n))


def naive_ones(x):
    n, count = abs(x), 0
    while n:
        count += n % 2
        n //= 2
    return count


@pytest.mark.parametrize("x, i, expected", [(26, 4, 1), (0, 7, 0), (-1, 13, 1)])
def test_bit_value(x, i, expected):
    assert b.bit_value(x, i) == expected


def test_bit_value_index_error():
    with pytest.raises(BitIndexError):
        b.bit_value(1, 32)


@pytest.mark.parametrize("n, expected", [(4, 16), (0, 1), (31, 2147483648)])
def test_pow2(n, expected):
    assert b.pow2(n) == expected


def test_pow2_by_doubling():
    value = 1
    for n in range(32):
        assert b.pow2(n) == value
        value *= 2


@pytest.mark.parametrize("n", [-1, 32])
def test_pow2_domain(n):
    with pytest.raises(DomainError):
        b.pow2(n)


@pytest.mark.parametrize("x, n, expected", [(41, 3, 5), (-26, 2, -6), (7, 0, 7)])
def test_div_pow2(x, n, expected):
    assert b.div_pow2(x, n) == expected == trunc_div(x, n)


def test_div_pow2_rejects_int_min():
    with pytest.raises(DomainError):
        b.div_pow2(b.INT_MIN, 1)


@pytest.mark.parametrize("x, k, expected", [(1, 4, 16), (5, 0, 5), (3, 31, 2147483648)])
def test_shl(x, k, expected):
    assert b.shl(x, k) == expected == (x * 2**k) % 2**32


@pytest.mark.parametrize("x, k, expected", [(26, 1, 13), (1, 1, 0), (2**31, 31, 1)])
def test_shr_logical(x, k, expected):
    assert b.shr_logical(x, k) == expected


@pytest.mark.parametrize("x, k, expected", [(-2, 1, -1), (12, 2, 3), (-26, 2, -7)])
def test_shr_arithmetic(x, k, expected):
    assert b.shr_arithmetic(x, k) == expected == x // 2**k


@pytest.mark.parametrize("fn", [b.shl, b.shr_logical, b.shr_arithmetic])
def test_shift_domain(fn):
    with pytest.raises(DomainError):
        fn(1, 32)


def test_shr_arithmetic_fills_with_sign():
    assert b.twos_complement_repr(b.shr_arithmetic(b.INT_MIN, 4), 32) == "1" * 5 + "0" * 27


@pytest.mark.parametrize("x, width, expected", [
    (-26, 16, "1111111111100110"),
    (0, 16, "0000000000000000"),
    (-32768, 16, "1000000000000000"),
    (-1, 8, "11111111"),
    (5, 32, "0" * 29 + "101"),
])
def test_twos_complement_repr(x, width, expected):
    assert b.twos_complement_repr(x, width) == expected


@pytest.mark.parametrize("x, width", [(32768, 16), (128, 8), (-129, 8), (1, 12)])
def test_twos_complement_range(x, width):
    with pytest.raises(DomainError):
        b.twos_complement_repr(x, width)


@pytest.mark.parametrize("x, expected", [(26, "11010"), (0, "0"), (-41, "-101001"), (1, "1")])
def test_min_binary_repr(x, expected):
    assert b.min_binary_repr(x) == expected


@pytest.mark.parametrize("x, expected", [(41, 3), (0, 0), (-26, 3), (b.INT_MAX, 31)])
def test_popcount(x, expected):
    assert b.popcount(x) == expected == naive_ones(x)


@pytest.mark.parametrize("fn", [b.popcount, b.min_binary_repr])
def test_abs_based_reject_int_min(fn):
    with pytest.raises(DomainError):
        fn(b.INT_MIN)


@pytest.mark.parametrize("x, y, and_, or_, xor_", [
    (0, 0, 0, 0, 0), (0, 1, 0, 1, 1), (1, 0, 0, 1, 1), (1, 1, 1, 1, 0),
])
def test_truth_table_single_bit(x, y, and_, or_, xor_):
    assert b.bit_and(x, y) == and_
    assert b.bit_or(x, y) == or_
    assert b.bit_xor(x, y) == xor_
    assert b.bit_not(x) & 1 == 1 - x


@given(unsigned, unsigned)
def test_truth_table_per_bit(x, y):
    for i in range(32):
        xi, yi = (x >> i) % 2, (y >> i) % 2
        assert (b.bit_and(x, y) >> i) % 2 == (xi and yi)
        assert (b.bit_or(x, y) >> i) % 2 == (xi or yi)
        assert (b.bit_xor(x, y) >> i) % 2 == (xi != yi)
        assert (b.bit_not(x) >> i) % 2 == 1 - xi


@given(unsigned, shift)
def test_shl_is_multiplication_mod_word(x, k):
    assert b.shl(x, k) == (x * 2**k) % 2**32


@given(st.integers(min_value=0, max_value=b.INT_MAX), shift)
def test_shifts_agree_on_non_negative(x, k):
    assert b.shr_logical(x, k) == b.shr_arithmetic(x, k) == b.div_pow2(x, k)


@given(signed_abs, shift)
def test_div_pow2_truncates(x, n):
    assert b.div_pow2(x, n) == trunc_div(x, n)


@given(signed, shift)
def test_shr_arithmetic_floors(x, k):
    assert b.shr_arithmetic(x, k) == x // 2**k


@given(st.sampled_from(b.REPR_WIDTHS), st.data())
def test_repr_roundtrip(width, data):
    x = data.draw(st.integers(min_value=-(2 ** (width - 1)), max_value=2 ** (width - 1) - 1))
    bits = b.twos_complement_repr(x, width)
    assert len(bits) == width
    assert b.from_twos_complement(bits) == x


@given(signed_abs)
def test_popcount_matches_binary_string(x):
    assert b.popcount(x) == b.min_binary_repr(abs(x)).count("1")


@given(signed, shift)
def test_bit_value_matches_repr(x, i):
    assert b.bit_value(x, i) == (b.twos_complement_repr(x, 32)[31 - i] == "1")


@given(signed)
def test_signed_unsigned_roundtrip(x):
    assert b.to_signed(b.to_unsigned(x)) == x
