"""
Weight, arrow and cap diagrams
==============================

A shifted weight puts crosses, arrowheads and circles on the integer line.
Arrows run from each epsilon position to its first free spot on the right;
caps pair crosses with circles.  The two overlays see the same endpoints.
"""

from superweights import ShiftedWeight, arrow_diagram, cap_diagram, weight_diagram
from superweights.render import render_ascii

lam = ShiftedWeight.parse("4 3 1 0 | 0 -1 -4 -5")
D = weight_diagram(lam)
A = arrow_diagram(lam)
C = cap_diagram(lam)

# %%
print(render_ascii(D))
print(render_ascii(D, arrows=A.arrows()))
print("k =", A.k, " M =", A.M)

# %%
print(render_ascii(D, caps=C.caps))
print("cap ends:", sorted(C.ends))

# %%
# At every position the number of arrows passing over equals the number of caps.
print([(r, A.over(r), C.over(r)) for r in range(-1, 9)])
