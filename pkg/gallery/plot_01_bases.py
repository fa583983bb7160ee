"""
Bases as words and as incomparable sets
=======================================

Every base reachable from the distinguished one by odd reflections is a
word in ``e`` and ``d``.  The simple right odd roots of the base form an
incomparable set of grid cells, and that set determines the word.
"""

from superweights import (
    BaseWord,
    b_sigma,
    base_from_incomparable_set,
    enumerate_bases,
    incomparable_set_of_base,
    reflection_sequence,
)

# %%
# The six bases of gl(2|2), listed with their simple right odd roots and
# the roots that must be reflected to reach them.
for w in enumerate_bases(2, 2):
    simple = sorted(incomparable_set_of_base(w))
    print(f"{w}  simple={simple}  |B|={len(b_sigma(w))}")

# %%
# Going back from a set of cells to the word.
w = base_from_incomparable_set({(1, 1), (2, 2), (4, 4)}, 4, 4)
print(w)

# %%
# A column-major reflection order reaches the word from the distinguished base.
print(reflection_sequence(w))
print(BaseWord.dist(4, 4), "->", w)
