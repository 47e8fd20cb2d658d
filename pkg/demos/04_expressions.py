# # A tiny set-algebra language
#
# Literals: {1,2,3}, {}, U (the universe), #26 (set with code 26).
# Operators from tightest to loosest: *, then + and -, then in, then
# the comparisons >= <= == !=.

# %%
from setbits import evaluate_text, parse, render, tokenize

print(evaluate_text("{1} + {2} * {2,3}"))       # {1,2}
print(evaluate_text("3 in {1,2} + {3}"))        # True
print(evaluate_text("({1,2,3} * {2,3,4}) - 2")) # {3}
print(evaluate_text("{} == #0"))                # True

# %%
# The universe size is a per-evaluation setting (default 32).
print(evaluate_text("U - {1}", 6))

# %%
# Trees render back to source with only the parentheses they need.
tree = parse(tokenize("(({1} + {2}) * (U - 3)) >= #5"))
print(render(tree))

# %%
# Errors carry the offset of the offending text.
from setbits import ExprError

for bad in ("{1,2@", "{1} <= {2} <= {3}", "{40}", "2 - {1}"):
    try:
        evaluate_text(bad)
    except ExprError as exc:
        print(f"{bad!r}: {exc}")
