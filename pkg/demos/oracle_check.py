"""Tropical lower bounds next to the mod-p Terracini rank.

The tropical total never exceeds the rank; where they meet the secant has
the value printed, and where the rank is below the expected dimension the
variety is defective.  Searches are short, so the bound for k is the best
total over all j <= k.
"""

from __future__ import annotations

from tropsec.models import ModelDescriptor, expected_secant_dim
from tropsec.oracle import DEFAULT_PRIME, SECOND_PRIME, terracini_dim
from tropsec.search import SearchParams, anneal, default_seeds

params = SearchParams(seed=0, restarts=2, steps=60)
models = [
    ModelDescriptor.veronese(3, 3),
    ModelDescriptor.segre(3, 2),
    ModelDescriptor.grassmannian(5, 2),
]

for model in models:
    config = model.config()
    print(model.family, model.params)
    best = 0
    for k in range(1, 5):
        problem = "voronoi" if config.is_singleton else "affine"
        seeds = default_seeds(config, k) if problem == "voronoi" else None
        trop = anneal(config, k, problem, params, seeds).best_result.total
        # secants only grow with k, so a smaller witness still bounds this one
        best = max(best, trop)
        ranks = {terracini_dim(model, k, prime=p).reported_dim for p in (DEFAULT_PRIME, SECOND_PRIME)}
        print(f"  k={k}  tropical={best:2d}  rank={sorted(ranks)}  expected={expected_secant_dim(model, k)}")
