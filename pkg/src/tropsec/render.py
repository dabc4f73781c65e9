"""SVG pictures of Voronoi partitions of planar configurations.

Supported projections:

* the plane Veronese triangle (points of N^3 with a common coordinate sum),
  drawn with unit lattice steps as unit lengths,
* binary forms (points of N^2 with a common sum) on a line,
* Segre configurations with m = 2 and d <= 2, in reduced or full coordinates.

Output depends only on the inputs: fixed scale, fixed palette, fixed number
formatting.
"""

from __future__ import annotations

import math
from typing import Sequence

from tropsec.bounds import Witness, eval_voronoi_partition, voronoi_assignment
from tropsec.geometry import GramForm, Point
from tropsec.models import PointConfig

UNIT = 40
PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939",
)
SUPPORTED = (
    "veronese m=3 (plane triangle)",
    "binary forms (line)",
    "segre m=2 with d <= 2",
)


class ProjectionError(ValueError):
    """The configuration has no supported planar picture."""


def _is_simplex(points: Sequence[Point], dim: int) -> bool:
    return (
        all(len(p) == dim for p in points)
        and all(x >= 0 and x.denominator == 1 for p in points for x in p)
        and len({sum(p) for p in points}) == 1
    )


def _is_cube(points: Sequence[Point]) -> bool:
    return all(x in (0, 1) for p in points for x in p)


def projection(config: PointConfig):
    """A map from Q^ambient_dim to (x, y) in lattice units, or ProjectionError."""
    pts = config.all_points()
    dim = config.ambient_dim
    if dim == 3 and _is_simplex(pts, 3):
        s3 = math.sqrt(3)
        return lambda p: (float(p[1] - p[0]) / 2, float(2 * p[2] - p[0] - p[1]) / (2 * s3))
    if dim == 2 and _is_simplex(pts, 2):
        return lambda p: (float(p[1] - p[0]) / 2, 0.0)
    if dim in (1, 2) and _is_cube(pts):
        return lambda p: (float(p[0]), float(p[1]) if dim == 2 else 0.0)
    if dim in (2, 4) and _is_cube(pts) and all(
        p[2 * i] + p[2 * i + 1] == 1 for p in pts for i in range(dim // 2)
    ):
        return lambda p: (float(p[1]), float(p[3]) if dim == 4 else 0.0)
    raise ProjectionError(
        "configuration is not planar under a supported projection ("
        + "; ".join(SUPPORTED)
        + ")"
    )


def _num(v: float) -> str:
    s = f"{v:.2f}"
    return "0.00" if s == "-0.00" else s


def render_svg(config: PointConfig, w: Witness, g: GramForm | None = None) -> str:
    """Lattice points coloured by their Voronoi owner, hollow where tied,
    with a square marker for each site inside the picture.

    Raises ProjectionError for unsupported configurations and
    ProblemMismatchError (from the evaluator) for non-singleton sets.
    """
    proj = projection(config)
    res = eval_voronoi_partition(config, w, g)
    points = [pts[0] for _, pts in config.sets]
    owners = voronoi_assignment(points, w.sites, g)
    xy = [proj(p) for p in points]
    xs = [x for x, _ in xy]
    ys = [y for _, y in xy]
    x0, x1 = min(xs) - 1, max(xs) + 1
    y0, y1 = min(ys) - 1, max(ys) + 1

    def sx(x: float) -> float:
        return (x - x0) * UNIT

    def sy(y: float) -> float:
        return (y1 - y) * UNIT

    width, height = (x1 - x0) * UNIT, (y1 - y0) * UNIT
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_num(width)}" '
        f'height="{_num(height)}" viewBox="0 0 {_num(width)} {_num(height)}">',
        f"<title>Voronoi partition, k={w.k}, total {res.total}</title>",
        f'<rect x="0" y="0" width="{_num(width)}" height="{_num(height)}" fill="#ffffff"/>',
    ]
    for (label, _), (x, y), owner in zip(config.sets, xy, owners):
        if owner is None:
            out.append(
                f'<circle class="point tie" data-label="{label}" cx="{_num(sx(x))}" '
                f'cy="{_num(sy(y))}" r="7" fill="none" stroke="#000000" stroke-width="2"/>'
            )
        else:
            col = PALETTE[owner % len(PALETTE)]
            out.append(
                f'<circle class="point player-{owner}" data-label="{label}" '
                f'cx="{_num(sx(x))}" cy="{_num(sy(y))}" r="7" fill="{col}" '
                f'stroke="#000000" stroke-width="1"/>'
            )
    for i, site in enumerate(w.sites):
        x, y = proj(site)
        if not (x0 <= x <= x1 and y0 <= y <= y1):
            continue  # far-away padding sites
        col = PALETTE[i % len(PALETTE)]
        out.append(
            f'<rect class="site player-{i}" x="{_num(sx(x) - 4)}" y="{_num(sy(y) - 4)}" '
            f'width="8" height="8" fill="{col}" stroke="#000000" stroke-width="1"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
