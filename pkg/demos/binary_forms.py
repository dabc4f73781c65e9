"""Binary forms: the points 0..d on a line, and k players.

Sites at midpoints of consecutive lattice points each win two points, so
k players reach min(2k, d + 1).  A short anneal from random sites usually
finds the same value.
"""

from __future__ import annotations

from tropsec.bounds import eval_voronoi_partition
from tropsec.models import ModelDescriptor
from tropsec.search import SearchParams, anneal, midpoint_chain_witness

d = 9
config = ModelDescriptor.binary_forms(d).config()

for k in range(1, 7):
    total = eval_voronoi_partition(config, midpoint_chain_witness(d, k)).total
    print(f"k={k}  midpoint chain total={total}  min(2k, d+1)={min(2 * k, d + 1)}")

params = SearchParams(seed=3, restarts=4, steps=200)
out = anneal(config, 4, "voronoi", params)
print("anneal, k=4:", out.best_result.total)
print("best sites:", [tuple(str(x) for x in s) for s in out.best_witness.sites])
print("trace:", out.trace[:10])
