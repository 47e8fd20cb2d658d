# # Subsets of {1..n} as a single integer
#
# Element i is in the set iff bit i-1 of the code is 1.

# %%
from setbits import SmallSet

A = SmallSet.encode([2, 4, 5], 16)
print(A, A.code)                 # {2,4,5} 26
print(SmallSet.from_code(41, 8)) # {1,4,6}

# %%
# The whole universe {1..32} is 2^32 - 1; it can be built without ever
# forming 2^32.
U = SmallSet.full(32)
print(U.code == ((1 << 31) - 1) * 2 + 1)

# %%
# Operator notation: * intersection, + union or insertion, - difference
# or removal, >= and <= containment (inclusive), in for membership.
B = SmallSet.encode([4, 7], 16)
print(A * B, A + B, A + 9, 9 + A, A - 4, A - B)
print(A >= SmallSet.encode([4], 16), A <= B, 5 in A)

# %%
# Removal and difference use x & (x ^ y), which is the same as x & ~y.
x, y = A.code, B.code
print(x & (x ^ y) == x & ~y, (A - B).code)

# %%
# Cardinality is a popcount of the code; complement flips the n low bits.
print(A.cardinality(), A.complement().cardinality())
