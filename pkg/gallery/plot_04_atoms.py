"""
Atoms
=====

The arrows of a dominant weight tile disjoint segments of the line.  Each
segment carries a smaller weight, and the change tracking diagram splits
into the blocks of these atoms.
"""

from superweights import ShiftedWeight
from superweights.ctd import atom_index_sets, atom_weight, ctd
from superweights.render import render_ctd_ascii

lam = ShiftedWeight.parse("6 5 4 3 0 | 0 -1 -4 -6")
for A in atom_index_sets(lam, include_trivial=True):
    print(A, A.segment, atom_weight(lam, A))

# %%
print(render_ctd_ascii(ctd(lam)))
