"""
Searching for tail gaps
=======================

Scan canonical dominant weights and keep those with ``tail < longtail``.
Gaps already show up in gl(3|3).  The gl(5|5) scan with bound 6 takes
under a minute on four workers.
"""

from superweights.tails import search_tail_gap

for rec in search_tail_gap(3, 3, 3):
    print(rec.to_json())

# %%
print(len(search_tail_gap(2, 2, 3)), "gaps in gl(2|2)")
