"""
Tail versus longtail
====================

``longtail`` is the tallest stack of crosses over all bases.  ``tail``
looks only at one base, read off from the dagger diagram.  For the weight
below they differ: 2 against 3.
"""

from superweights import ShiftedWeight, shifted_weight_for_base, weight_diagram
from superweights.render import render_ascii
from superweights.tails import dagger_weight, longtail, phi, sigma_lambda, tail, witness_base

lam = ShiftedWeight.parse("5 4 3 0 -1 | 1 0 -3 -4 -5")
print("tail", tail(lam), "longtail", longtail(lam))

# %%
dag = phi(lam)
print(render_ascii(dag.diagram))
print("base", sigma_lambda(lam), "weight", dagger_weight(lam))

# %%
# The base that stacks three crosses.
w = witness_base(lam)
nu = shifted_weight_for_base(lam, w)
print(w, nu)
print(render_ascii(weight_diagram(nu)))
