"""Finding good witnesses.

Exhaustive search over candidate sites for small instances, simulated
annealing on a rational grid for medium ones, tie-breaking perturbation,
and the constructive seeders: midpoint chains for binary forms, corner and
code witnesses, and lattice-triangle tilings for plane cubics and beyond.
"""

from __future__ import annotations

import itertools
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Iterator, Sequence

import numpy as np

from tropsec.bounds import (
    PartitionResult,
    Witness,
    evaluate,
    eval_voronoi_partition,
    voronoi_assignment,
)
from tropsec.geometry import GramForm, InputError, Point, affine_dim, as_point
from tropsec.models import PointConfig, multi_indices, veronese_config


class BudgetExceeded(RuntimeError):
    def __init__(self, required: int, budget: int):
        super().__init__(f"brute force needs {required} evaluations, budget is {budget}")
        self.required = required
        self.budget = budget


class ConstructionError(RuntimeError):
    """A constructed witness failed verification."""

    def __init__(self, message: str, defective_cell=None):
        super().__init__(message)
        self.defective_cell = defective_cell


@dataclass(frozen=True)
class SearchParams:
    seed: int = 0
    restarts: int = 4
    steps: int = 1500
    initial_step_size: Fraction = Fraction(1)
    cooling: Fraction = Fraction(995, 1000)
    candidate_grid_denominator: int = 2

    def __post_init__(self):
        if self.restarts < 1 or self.steps < 1:
            raise InputError("restarts and steps must be >= 1")
        if not 0 < self.cooling < 1:
            raise InputError("cooling must lie in (0, 1)")
        if self.candidate_grid_denominator < 1:
            raise InputError("grid denominator must be >= 1")


@dataclass(frozen=True)
class SearchOutcome:
    best_witness: Witness
    best_result: PartitionResult
    trace: tuple[tuple[int, int], ...] = field(default=())


def value_cap(config: PointConfig, k: int, problem: str) -> int:
    """Upper bound on any witness value: n, and k times the per-player cap."""
    pts = config.all_points()
    if problem == "linear":
        per = config.ambient_dim
    else:
        per = 1 + affine_dim(pts)
    return min(len(config), k * per)


def _witness_key(w: Witness):
    return (w.sites, w.offsets or ())


# -- brute force -----------------------------------------------------------


def brute_force(
    config: PointConfig,
    k: int,
    problem: str,
    candidates: Sequence[Sequence],
    g: GramForm | None = None,
    budget: int = 10**6,
    offset_grid: Sequence = (0,),
) -> SearchOutcome:
    """Best witness among all k-subsets of candidate sites.

    For the affine problem every subset is also tried with all offset
    vectors drawn from ``offset_grid`` (which should contain 0).
    """
    cands = sorted({as_point(c) for c in candidates})
    if k < 1 or k > len(cands):
        raise InputError(f"cannot choose {k} of {len(cands)} candidate sites")
    grid = [Fraction(x) for x in offset_grid] if problem == "affine" else [None]
    required = math.comb(len(cands), k) * len(grid) ** k
    if required > budget:
        raise BudgetExceeded(required, budget)
    best = None
    trace = []
    step = 0
    for subset in itertools.combinations(cands, k):
        offset_choices = itertools.product(grid, repeat=k) if problem == "affine" else [None]
        for offs in offset_choices:
            w = Witness(subset, offs)
            res = evaluate(problem, config, w, g)
            if best is None or res.total > best[1].total:
                best = (w, res)
                trace.append((step, res.total))
            step += 1
    return SearchOutcome(best[0], best[1], tuple(trace))


# -- annealing -------------------------------------------------------------


def _random_witness(rng, lo, hi, k, den, affine):
    sites = []
    for _ in range(k):
        sites.append(
            tuple(Fraction(int(rng.integers(a * den, b * den + 1)), den) for a, b in zip(lo, hi))
        )
    offsets = tuple(Fraction(0) for _ in range(k)) if affine else None
    return Witness(tuple(sites), offsets)


def _neighbour(w: Witness, rng, config_points, den, max_mult, affine):
    sites = [list(s) for s in w.sites]
    offsets = list(w.offsets) if affine else None
    i = int(rng.integers(len(sites)))
    move = rng.random()
    if affine and move < 0.15:
        offsets[i] += Fraction(int(rng.choice([-1, 1])) * int(rng.integers(1, max_mult + 1)), den)
    elif move < 0.8:
        c = int(rng.integers(len(sites[i])))
        sites[i][c] += Fraction(int(rng.choice([-1, 1])) * int(rng.integers(1, max_mult + 1)), den)
    else:
        p = config_points[int(rng.integers(len(config_points)))]
        sites[i] = [x + Fraction(int(rng.integers(-1, 2)), den) for x in p]
    return Witness(tuple(tuple(s) for s in sites), tuple(offsets) if affine else None)


def _anneal_run(args):
    config, k, problem, params, restart, seed_witness, g = args
    rng = np.random.default_rng([params.seed, restart])
    den = params.candidate_grid_denominator
    affine = problem == "affine"
    pts = config.all_points()
    lo = [math.floor(min(p[c] for p in pts)) for c in range(config.ambient_dim)]
    hi = [math.ceil(max(p[c] for p in pts)) for c in range(config.ambient_dim)]
    cap = value_cap(config, k, problem)
    if seed_witness is None:
        cur = _random_witness(rng, lo, hi, k, den, affine)
    else:
        cur = seed_witness
        if affine and cur.offsets is None:
            cur = Witness(cur.sites, (Fraction(0),) * k)
    cur_val = evaluate(problem, config, cur, g).total
    best, best_val = cur, cur_val
    trace = [(restart * params.steps, best_val)]
    temp = 1.0
    cooling = float(params.cooling)
    base = max(1, int(params.initial_step_size * den))
    for step in range(params.steps):
        if best_val >= cap:
            break
        max_mult = max(1, round(base * temp))
        cand = _neighbour(cur, rng, pts, den, max_mult, affine)
        val = evaluate(problem, config, cand, g).total
        if val >= cur_val or rng.random() < math.exp((val - cur_val) / max(temp, 1e-9)):
            cur, cur_val = cand, val
            if val > best_val or (val == best_val and _witness_key(cand) < _witness_key(best)):
                if val > best_val:
                    trace.append((restart * params.steps + step + 1, val))
                best, best_val = cand, val
        temp *= cooling
    return best, best_val, trace


def anneal(
    config: PointConfig,
    k: int,
    problem: str,
    params: SearchParams | None = None,
    seeds: Sequence[Witness] | None = None,
    g: GramForm | None = None,
    jobs: int = 1,
) -> SearchOutcome:
    """Simulated annealing over grid moves of the sites (and offsets).

    Restart r starts from ``seeds[r]`` when there is one, otherwise from
    random grid sites in the bounding box of the configuration.  The result
    is the best witness over all restarts, ties going to the
    lexicographically smallest witness, so it does not depend on ``jobs``.
    """
    params = params or SearchParams()
    seeds = list(seeds or [])
    for s in seeds:
        if s.k != k:
            raise InputError(f"seed witness has {s.k} sites, expected {k}")
    tasks = [
        (config, k, problem, params, r, seeds[r] if r < len(seeds) else None, g)
        for r in range(max(params.restarts, len(seeds)))
    ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            runs = list(pool.map(_anneal_run, tasks))
    else:
        runs = [_anneal_run(t) for t in tasks]
    best_w, best_v = None, -1
    trace = []
    for w, v, tr in runs:
        trace.extend(tr)
        if v > best_v or (v == best_v and _witness_key(w) < _witness_key(best_w)):
            best_w, best_v = w, v
    return SearchOutcome(best_w, evaluate(problem, config, best_w, g), tuple(trace))


# -- perturbation ----------------------------------------------------------


def perturb_witness(w: Witness, config: PointConfig, g: GramForm | None = None) -> Witness:
    """Move sites slightly so that tied points get a strict nearest site.

    Site i moves by eps*(i+1)*(1, 1/2, 1/4, ...).  Tied distances then
    differ as polynomials in eps (the eps^2 coefficients are distinct), so
    halving eps eventually keeps every strict assignment, sends every tied
    point to one of the sites it was tied between, and leaves no ties.
    Tie-free witnesses are returned unchanged.
    """
    if not config.is_singleton:
        raise InputError("perturbation applies to Voronoi witnesses")
    points = [pts[0] for _, pts in config.sets]
    before = voronoi_assignment(points, w.sites, g)
    if all(o is not None for o in before):
        return w
    dists = [
        [_dsq(s, p, g) for s in w.sites] for p in points
    ]
    tied_sets = [
        None if o is not None else {i for i, x in enumerate(row) if x == min(row)}
        for o, row in zip(before, dists)
    ]
    u = tuple(Fraction(1, 2**c) for c in range(w.dim))
    eps = Fraction(1, 2)
    for _ in range(256):
        sites = tuple(
            tuple(x + eps * (i + 1) * uc for x, uc in zip(s, u)) for i, s in enumerate(w.sites)
        )
        after = voronoi_assignment(points, sites, g)
        ok = all(
            (a == b) if b is not None else (a is not None and a in tied)
            for a, b, tied in zip(after, before, tied_sets)
        )
        if ok:
            return Witness(sites)
        eps /= 2
    raise ConstructionError("could not resolve ties by perturbation")


def _dsq(u, w, g):
    diff = tuple(a - b for a, b in zip(u, w))
    if g is None:
        return sum(x * x for x in diff)
    return g.inner(diff, diff)


# -- seeders ---------------------------------------------------------------


def dummy_sites(dim: int, count: int, scale: int) -> list[Point]:
    """Sites far below the negative orthant; they win nothing."""
    far = -10 * (scale + 1)
    return [
        tuple(Fraction(far * (j + 2) if c == 0 else far) for c in range(dim)) for j in range(count)
    ]


def pad_witness(sites: Sequence[Sequence], k: int, scale: int) -> Witness:
    """First k sites, topped up with far-away dummies."""
    sites = [as_point(s) for s in sites]
    if k <= len(sites):
        return Witness(tuple(sites[:k]))
    return Witness(tuple(sites) + tuple(dummy_sites(len(sites[0]), k - len(sites), scale)))


def midpoint_chain_sites(d: int) -> list[Point]:
    """Binary forms of degree d: midpoints of consecutive pairs of exponents
    (0,d),(1,d-1) | (2,d-2),(3,d-3) | ..., plus (d,0) when d is even."""
    sites = []
    for i in range(1, (d + 1) // 2 + 1):
        a = (2 * i - 2, d - 2 * i + 2)
        b = (2 * i - 1, d - 2 * i + 1)
        sites.append(tuple(Fraction(x + y, 2) for x, y in zip(a, b)))
    if d % 2 == 0:
        sites.append((Fraction(d), Fraction(0)))
    return sites


def midpoint_chain_witness(d: int, k: int) -> Witness:
    return pad_witness(midpoint_chain_sites(d), k, d)


# -- plane lattice cells (Veronese, m = 3) --------------------------------


def lattice_triangles(points: Sequence[tuple[int, ...]]) -> list[tuple[tuple[int, ...], ...]]:
    """All unit triangles (three mutually adjacent lattice points) inside ``points``."""
    pset = set(points)
    if not points:
        return []
    d = sum(points[0])
    out = []
    for b in multi_indices(3, d - 1) if d >= 1 else []:
        t = tuple(tuple(b[i] + (i == j) for i in range(3)) for j in range(3))
        if all(x in pset for x in t):
            out.append(t)
    for g in multi_indices(3, d + 1):
        if min(g) >= 1:
            t = tuple(tuple(g[i] - (i == j) for i in range(3)) for j in range(3))
            if all(x in pset for x in t):
                out.append(t)
    return out


def _adjacent(p, q) -> bool:
    return sum(abs(a - b) for a, b in zip(p, q)) == 2


def small_cells(points: Sequence[tuple[int, ...]]) -> list[tuple[tuple[int, ...], ...]]:
    """Unit triangles, then bent triples p-q-r (two lattice steps at 120 degrees)."""
    pset = set(points)
    cells = lattice_triangles(points)
    seen = {frozenset(c) for c in cells}
    for q in points:
        nbrs = [p for p in points if _adjacent(p, q)]
        for p, r in itertools.combinations(nbrs, 2):
            if sum((a - b) ** 2 for a, b in zip(p, r)) == 6 and frozenset((p, q, r)) not in seen:
                seen.add(frozenset((p, q, r)))
                cells.append((p, q, r))
    return [c for c in cells if all(x in pset for x in c)]


def cell_covers(
    points: Sequence[tuple[int, ...]],
    cells: Sequence[tuple[tuple[int, ...], ...]],
    edges: int = 0,
    singles: int = 0,
) -> Iterator[list[tuple[tuple[int, ...], ...]]]:
    """Exact covers of ``points`` by the given 3-point cells plus at most
    ``edges`` adjacent pairs and ``singles`` single points (depth-first,
    always branching on the first uncovered point)."""
    order = sorted(points)
    by_point = {p: [c for c in cells if p in c] for p in order}
    used: set = set()
    chosen: list = []

    def rec(e, s):
        p = next((q for q in order if q not in used), None)
        if p is None:
            yield list(chosen)
            return
        for c in by_point[p]:
            if not used.intersection(c):
                used.update(c)
                chosen.append(c)
                yield from rec(e, s)
                chosen.pop()
                used.difference_update(c)
        if e:
            for q in order:
                if q not in used and _adjacent(p, q):
                    used.update((p, q))
                    chosen.append((p, q))
                    yield from rec(e - 1, s)
                    chosen.pop()
                    used.difference_update((p, q))
        if s:
            used.add(p)
            chosen.append((p,))
            yield from rec(e, s - 1)
            chosen.pop()
            used.discard(p)

    yield from rec(edges, singles)


def _centroid(cell) -> Point:
    n = len(cell)
    return tuple(Fraction(sum(c[i] for c in cell), n) for i in range(len(cell[0])))


def realise_cells(
    points: Sequence[Point], cells: Sequence[Sequence[Point]], plane_sum: int
) -> list[Point] | None:
    """Sites in Q^3 whose strict Voronoi cells on ``points`` are exactly ``cells``.

    Centroids are tried first.  Otherwise a linear program finds a power
    diagram with positive margin (site p_i in the plane, additive constant
    C_i), which is lifted off the plane to an ordinary Voronoi diagram and
    rounded to rationals.  Returns None when neither succeeds.
    """
    points = [as_point(p) for p in points]
    target = {as_point(p): i for i, cell in enumerate(cells) for p in cell}

    def check(sites):
        owners = voronoi_assignment(points, sites)
        return all(o == target.get(p) for o, p in zip(owners, points))

    cents = [_centroid([as_point(p) for p in c]) for c in cells]
    if check(cents):
        return cents
    lp = _lp_sites(points, len(cells), target, plane_sum)
    if lp is not None and check(lp):
        return lp
    return None


def _lp_sites(points, n, target, plane_sum):
    from scipy.optimize import linprog

    # variables: (p_i in R^3, C_i) per cell, then the margin
    nv = 4 * n + 1
    a_ub = []
    for p in points:
        i = target.get(p)
        if i is None:
            continue
        pf = [float(x) for x in p]
        for j in range(n):
            if j == i:
                continue
            # (C_i - 2 p_i.a) - (C_j - 2 p_j.a) + margin <= 0
            row = [0.0] * nv
            row[4 * i + 3] += 1
            row[4 * j + 3] -= 1
            for c in range(3):
                row[4 * i + c] -= 2 * pf[c]
                row[4 * j + c] += 2 * pf[c]
            row[-1] = 1
            a_ub.append(row)
    a_eq = []
    for i in range(n):
        row = [0.0] * nv
        for c in range(3):
            row[4 * i + c] = 1
        a_eq.append(row)
    span = float(plane_sum + 2)
    bounds = []
    for _ in range(n):
        bounds += [(-2.0, span)] * 3 + [(-10 * span * span, 10 * span * span)]
    bounds.append((0.0, 1.0))
    obj = [0.0] * nv
    obj[-1] = -1.0
    res = linprog(
        obj,
        A_ub=a_ub or None,
        b_ub=[0.0] * len(a_ub) or None,
        A_eq=a_eq,
        b_eq=[float(plane_sum)] * n,
        bounds=bounds,
        method="highs",
    )
    if res.status != 0 or res.x[-1] < 1e-6:
        return None
    x = res.x
    ps = [
        tuple(Fraction(float(v)).limit_denominator(10**4) for v in x[4 * i : 4 * i + 3])
        for i in range(n)
    ]
    cs = [Fraction(float(x[4 * i + 3])).limit_denominator(10**4) for i in range(n)]
    # lift: v = p + t(1,1,1) has |v - a|^2 = |p - a|^2 + 3t^2 for a on the plane
    norms = [sum(v * v for v in p) for p in ps]
    shift = max(nrm - c for c, nrm in zip(cs, norms)) + Fraction(1, 10)
    sites = []
    for p, c, nrm in zip(ps, cs, norms):
        t = Fraction(math.sqrt(float((c + shift - nrm) / 3))).limit_denominator(10**5)
        sites.append(tuple(v + t for v in p))
    return sites


def _cell_order(cells):
    return sorted(cells, key=lambda c: (-len(c), sorted(c)))


def build_veronese_m3_sites(d: int, max_covers: int = 2000) -> tuple[list[Point], list[int]]:
    """Master site list for the plane configuration of degree d.

    Searches covers of the lattice triangle by 3-point cells, using the
    fewest edges and single points possible (one single point when the
    point count is 1 mod 3), and returns the sites of the first cover whose
    cells can be realised as Voronoi cells, with the cell sizes.  Cells of
    three points come first, then edges, then single points.
    """
    pts = multi_indices(3, d)
    n = len(pts)
    cells = small_cells(pts)
    for extra in range(0, n):
        edges, singles = extra, n % 3 + extra
        if 2 * edges + singles > n:
            break
        for count, cover in enumerate(cell_covers(pts, cells, edges, singles)):
            if count >= max_covers:
                break
            cover = _cell_order(cover)
            sites = realise_cells(pts, cover, d)
            if sites is not None:
                return sites, [len(c) for c in cover]
    raise ConstructionError(f"no realisable cover found for d={d}")


@lru_cache(maxsize=None)
def _bundle(d: int) -> dict:
    name = f"veronese_m3_d{d}.json"
    try:
        text = resources.files("tropsec").joinpath("witnesses", name).read_text()
    except FileNotFoundError as exc:
        raise InputError(
            f"no bundled witness for d={d} (bundled: 1..8); use search.anneal or "
            "extend_veronese_witness"
        ) from exc
    return json.loads(text)


def bundled_veronese_sites(d: int) -> list[Point]:
    if not 1 <= d <= 8:
        raise InputError(
            f"no bundled witness for d={d} (bundled: 1..8); use search.anneal or "
            "extend_veronese_witness"
        )
    return [as_point(s) for s in _bundle(d)["sites"]]


def veronese_m3_witness(d: int, k: int) -> Witness:
    """Bundled witness for k-th secants of the degree-d plane Veronese.

    Prefixes of a master site list; beyond its length the witness is padded
    with far-away sites that win nothing.
    """
    if k < 1:
        raise InputError("k must be >= 1")
    return pad_witness(bundled_veronese_sites(d), k, d)


def veronese_m3_value(d: int, k: int) -> int:
    """dim kC for the plane Veronese of degree d (the defective cases are
    (2,2) and (4,5), each with defect 1)."""
    n = (d + 1) * (d + 2) // 2
    if (d, k) in ((2, 2), (4, 5)):
        return 3 * k - 1
    return min(3 * k, n)


def extend_veronese_witness(
    w: Witness | Sequence[Sequence], target_d: int, max_attempts: int = 200
) -> Witness:
    """Grow a degree-(target_d - 2) or (target_d - 6) plane witness to degree target_d.

    The triangle cells of the source are translated into the larger
    triangle; the remaining points are tiled by three-point cells (plus one
    single point when target_d = 0 mod 3).  New sites sit above the cell
    centroids, lifted by a small linear program when plain centroids do not
    separate; failing that, all cells are realised together.  The result
    lists the three-point sites first and is checked with the evaluator
    before being returned.
    """
    sites = list(w.sites) if isinstance(w, Witness) else [as_point(s) for s in w]
    if target_d < 3:
        raise InputError("extension needs target_d >= 3")
    # d = 2 mod 3 prefers the d - 6 step, the other classes the d - 2 step;
    # the source degree is whichever one the witness fully realises
    steps = (6, 2) if target_d % 3 == 2 else (2, 6)
    src_eval = None
    for step in steps:
        src_d = target_d - step
        if src_d < 1:
            continue
        res = eval_voronoi_partition(veronese_config(3, src_d), Witness(tuple(sites)))
        if res.total == len(multi_indices(3, src_d)):
            src_eval = res
            break
    if src_eval is None:
        raise InputError(
            f"source is not a non-defective witness of degree {target_d - 2} "
            f"or {target_d - 6}"
        )
    tgt_pts = multi_indices(3, target_d)
    n_tgt = len(tgt_pts)
    config = veronese_config(3, target_d)
    # only the triangle cells are kept; the source's leftover points join the border
    src_tri = [i for i, dim in enumerate(src_eval.player_dims) if dim == 3]
    first_bad = None
    attempts = 0
    for shift in multi_indices(3, step):
        moved = [tuple(x + a for x, a in zip(sites[i], shift)) for i in src_tri]
        src_cells = [
            tuple(tuple(x + a for x, a in zip(q, shift)) for q in src_eval.winning_directions[i])
            for i in src_tri
        ]
        owned = {p: j for j, cell in enumerate(src_cells) for p in cell}
        border = [p for p in tgt_pts if p not in owned]
        covers = itertools.chain(
            cell_covers(border, lattice_triangles(border), 0, len(border) % 3),
            cell_covers(border, small_cells(border), 0, len(border) % 3),
        )
        for cover in covers:
            attempts += 1
            if attempts > max_attempts:
                break
            cover = _cell_order(cover)
            new_sites = _border_sites(moved, owned, cover)
            if new_sites is not None:
                ordered = moved + new_sites
            else:
                # realise the embedded cells and the border together
                ordered = realise_cells(tgt_pts, src_cells + cover, target_d)
                if ordered is None:
                    continue
            cand = Witness(tuple(ordered))
            res = eval_voronoi_partition(config, cand)
            if res.total == n_tgt:
                return cand
            if first_bad is None:
                first_bad = _first_defective_cell(res)
        if attempts > max_attempts:
            break
    raise ConstructionError(
        f"no verified extension to degree {target_d}", defective_cell=first_bad
    )


def _border_sites(fixed_sites, owned, cover) -> list[Point] | None:
    """Sites for the border cells: centroids lifted off the plane by heights
    chosen (by a linear program in the squared heights) so that the fixed
    sites keep their points and each border cell gets exactly its own."""
    from scipy.optimize import linprog

    cents = [_centroid([as_point(p) for p in c]) for c in cover]
    plain = cents
    border_pts = [(as_point(p), t) for t, c in enumerate(cover) for p in c]
    old_pts = [(as_point(p), i) for p, i in owned.items()]

    def ok(sites):
        allsites = list(fixed_sites) + list(sites)
        pts = [p for p, _ in old_pts] + [p for p, _ in border_pts]
        want = [i for _, i in old_pts] + [len(fixed_sites) + t for _, t in border_pts]
        return voronoi_assignment(pts, allsites) == want

    if ok(plain):
        return plain
    n = len(cover)
    nv = n + 1
    a_ub, b_ub = [], []
    for p, t in border_pts:
        own = float(_dsq(cents[t], p, None))
        for s in range(n):
            if s != t:
                row = [0.0] * nv
                row[t], row[s], row[-1] = 1.0, -1.0, 1.0
                a_ub.append(row)
                b_ub.append(float(_dsq(cents[s], p, None)) - own)
        for v in fixed_sites:
            row = [0.0] * nv
            row[t], row[-1] = 1.0, 1.0
            a_ub.append(row)
            b_ub.append(float(_dsq(v, p, None)) - own)
    for p, i in old_pts:
        mine = float(_dsq(fixed_sites[i], p, None))
        for s in range(n):
            row = [0.0] * nv
            row[s], row[-1] = -1.0, 1.0
            a_ub.append(row)
            b_ub.append(float(_dsq(cents[s], p, None)) - mine)
    obj = [0.0] * nv
    obj[-1] = -1.0
    bounds = [(0.0, 1000.0)] * n + [(0.0, 1.0)]
    res = linprog(obj, A_ub=a_ub, b_ub=b_ub, bounds=bounds, method="highs")
    if res.status != 0 or res.x[-1] < 1e-6:
        return None
    sites = []
    for c, w in zip(cents, res.x[:n]):
        t = Fraction(math.sqrt(max(float(w), 0.0) / 3)).limit_denominator(10**5)
        sites.append(tuple(x + t for x in c))
    return sites if ok(sites) else None


def _first_defective_cell(res: PartitionResult):
    for i, (dim, cell) in enumerate(zip(res.player_dims, res.winning_directions)):
        if dim == 0 or dim < len(cell):
            return i, cell
    return None


def default_seeds(config: PointConfig, k: int) -> list[Witness]:
    """Constructive starting points for the annealer, in priority order:
    a lexicographic distance-3 code on binary cubes, corner witnesses on
    simplices, then the midpoint chain for binary forms."""
    seeds = []
    pts = config.all_points()
    if not config.is_singleton:
        return seeds
    dim = config.ambient_dim
    if all(x in (0, 1) for p in pts for x in p) and len(pts) == 2**dim:
        code: list[Point] = []
        for p in sorted(pts):
            if all(sum(a != b for a, b in zip(p, q)) >= 3 for q in code):
                code.append(p)
        seeds.append(pad_witness(code[:k], k, 1))
    elif dim >= 2 and len({sum(p) for p in pts}) == 1:
        d = int(sum(pts[0]))
        corners = [p for p in pts if sum(1 for x in p if x) == 1]
        if len(corners) >= k:
            seeds.append(Witness(tuple(corners[:k])))
        if dim == 2:
            seeds.append(midpoint_chain_witness(d, k))
    return seeds
