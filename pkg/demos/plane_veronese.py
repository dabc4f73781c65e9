"""Plane Veronese surfaces: bundled witnesses, the two defective cases,
and growing a witness to a larger degree by re-tiling the border.
"""

from __future__ import annotations

from tropsec.bounds import Witness, eval_voronoi_partition
from tropsec.models import ModelDescriptor, veronese_config
from tropsec.oracle import terracini_dim
from tropsec.search import bundled_veronese_sites, extend_veronese_witness, pad_witness

for d in range(1, 9):
    config = veronese_config(3, d)
    n = len(config)
    sites = bundled_veronese_sites(d)
    totals = [
        eval_voronoi_partition(config, pad_witness(sites, k, d)).total
        for k in range(1, -(-n // 3) + 1)
    ]
    print(f"d={d}  n={n:2d}  totals={totals}")

# degree 2 with two players and degree 4 with five fall one short of 3k;
# the rank oracle agrees that these are genuinely defective
for d, k in ((2, 2), (4, 5)):
    rep = terracini_dim(ModelDescriptor.veronese(3, d), k)
    print(f"d={d} k={k}: Terracini rank {rep.reported_dim}, 3k = {3 * k}")

# degree 7 -> 9 moves the triangle cells into the corner and tiles the new strip
w9 = extend_veronese_witness(Witness(tuple(bundled_veronese_sites(7))), 9)
config = veronese_config(3, 9)
print("d=9 sites:", w9.k, "total:", eval_voronoi_partition(config, w9).total, "of", len(config))
