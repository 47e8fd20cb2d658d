# # Universes larger than one word
#
# A universe of m elements needs ceil(m/32) words.  Word 0 holds
# elements 1..32, word 1 holds 33..64, and so on.

# %%
from setbits import BigSet, SmallSet, word_count

print([word_count(m) for m in (1, 32, 33, 64, 65, 100)])

# %%
S = BigSet.encode([1, 33, 40, 100], 100)
print(S, S.to_hex())
print(S.code == 2**0 + 2**32 + 2**39 + 2**99)

# %%
# Complement masks the last word so no bits appear past element m.
print(BigSet.empty(33).complement().words)

# %%
# For m <= 32 a BigSet is interchangeable with a SmallSet.
small = SmallSet.encode([2, 4, 5], 16)
print(BigSet.from_small(small).to_small() == small)
