"""
Change tracking diagram and transport
=====================================

The change tracking diagram marks the right odd roots that move the
weight.  Adding the marked roots inside ``B_sigma`` transports a
dominant weight to any other base, with no reflections performed.
"""

from superweights import BaseWord, ShiftedWeight, shifted_weight_for_base, weight_diagram
from superweights.ctd import ctd, distinguished_to_anti_walk
from superweights.render import render_ascii, render_ctd_ascii

lam = ShiftedWeight.parse("4 3 0 | 0 -1 -3 -4 -5")
print(render_ctd_ascii(ctd(lam)))

# %%
nu = shifted_weight_for_base(lam, BaseWord("edddeedd"))
print(nu)

# %%
# Walking from the distinguished base to the anti-distinguished one.
lam = ShiftedWeight.parse("6 4 3 0 | 0 -1 -4 -5")
for t, nu in enumerate(distinguished_to_anti_walk(lam)):
    print(BaseWord.sigma_i(lam.m - t, lam.m, lam.n), nu)
    print(render_ascii(weight_diagram(nu), lo=-1, hi=8))
