"""A Hamming code and the ninth secant of six projective lines.

The eight words of the binary [6,3,3] code become Voronoi sites in the
cube {0,1}^6, with a ninth site at the centre.  Each codeword owns its
radius-one ball, the centre owns what is left, and the tropical total
reaches 63, one short of the ambient 64.
"""

from __future__ import annotations

from tropsec.bounds import eval_voronoi_partition
from tropsec.codes import centre_site, code_from_parity_check, code_to_segre_witness, rook_bound
from tropsec.models import ModelDescriptor, segre_config
from tropsec.oracle import terracini_dim

H = [[0, 0, 0, 1, 1, 1], [0, 1, 1, 0, 0, 1], [1, 0, 1, 0, 1, 0]]

code = code_from_parity_check(H, 2)
print("codewords:", ["".join(map(str, w)) for w in code.codewords])
print("minimum distance:", code.min_distance)

# eight balls of seven points each
print("rook bound with 8 players:", rook_bound(code))

config = segre_config(6, 2, reduced=True)
w = code_to_segre_witness(code, [centre_site(6)])
res = eval_voronoi_partition(config, w)
print("player dims:", res.player_dims)
print("tropical total with 9 players:", res.total)

# the centre wins exactly the complements of the codewords
centre = res.winning_directions[8]
print("centre owns:", sorted("".join(str(int(x)) for x in p) for p in centre))

rep = terracini_dim(ModelDescriptor.segre(6, 2), 9)
print("Terracini rank mod", rep.prime, "->", rep.reported_dim)
