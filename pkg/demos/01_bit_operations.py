# # Word-level bit tricks
#
# Everything here works on 32-bit words.  Python integers are unbounded, so
# the helpers in `setbits.bit_ops` mask and range-check to keep the
# fixed-width behaviour visible.

# %%
from setbits import bit_ops as b

# Bits are numbered right to left, starting at 0.  26 = 2^4 + 2^3 + 2^1.
print([b.bit_value(26, i) for i in range(6)])  # [0, 1, 0, 1, 1, 0]

# %%
# Shifting left multiplies by a power of two; anything pushed past bit 31
# falls off the end.
print(b.pow2(10), b.shl(3, 4), b.shl(3, 31))

# %%
# Right shifts come in two flavours.  The logical one fills with zeros,
# the arithmetic one copies the sign bit, which rounds toward minus infinity.
print(b.shr_logical(0xFFFFFFFE, 1))   # 2147483647
print(b.shr_arithmetic(-26, 2))       # -7, i.e. floor(-6.5)

# Stripping the sign first rounds toward zero instead.
print(b.div_pow2(-26, 2))             # -6

# %%
# How negative numbers are laid out in a 16-bit word.
for x in (0, 1, -1, 16, -16, 26, -26, 32767, -32768):
    print(f"{x:>7}  {b.twos_complement_repr(x, 16)}")

# %%
# Minimal binary form and population count both work on |x|.
print(b.min_binary_repr(41), b.min_binary_repr(-41), b.popcount(-41))
