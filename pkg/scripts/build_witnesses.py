"""Regenerate the bundled plane Veronese witnesses under src/tropsec/witnesses.

Each master site list comes from tiling the degree-d lattice triangle by
small cells and realising the tiling as a Voronoi diagram.  Every prefix is
evaluated exactly before the file is written.

    python3 scripts/build_witnesses.py [--dmax 8]
"""

from __future__ import annotations

import argparse
from pathlib import Path

from tropsec.bounds import eval_voronoi_partition
from tropsec.models import veronese_config
from tropsec.search import build_veronese_m3_sites, pad_witness, veronese_m3_value
from tropsec.serialize import dumps, vec

FORMAT_VERSION = 1
OUT = Path(__file__).resolve().parent.parent / "src" / "tropsec" / "witnesses"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dmax", type=int, default=8)
    args = ap.parse_args()
    OUT.mkdir(parents=True, exist_ok=True)
    for d in range(1, args.dmax + 1):
        sites, sizes = build_veronese_m3_sites(d)
        config = veronese_config(3, d)
        totals = [
            eval_voronoi_partition(config, pad_witness(sites, k, d)).total
            for k in range(1, len(sites) + 1)
        ]
        expected = [veronese_m3_value(d, k) for k in range(1, len(sites) + 1)]
        if totals != expected:
            raise SystemExit(f"d={d}: totals {totals} differ from {expected}")
        doc = {
            "format_version": FORMAT_VERSION,
            "family": "veronese",
            "m": 3,
            "d": d,
            "cell_sizes": sizes,
            "totals": totals,
            "sites": [vec(s) for s in sites],
        }
        (OUT / f"veronese_m3_d{d}.json").write_text(dumps(doc))
        print(f"d={d}: {len(sites)} sites, totals {totals}")


if __name__ == "__main__":
    main()
