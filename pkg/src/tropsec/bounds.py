"""Exact evaluation of the linear, affine and Voronoi partition problems.

At a witness ``v`` each set ``A_b`` is won by the unique pair (i, alpha)
strictly minimising ``<v_i, alpha>`` (plus ``a_i`` in the affine problem)
over all players and all of ``A_b``; ties are reported and left alone.  In
the Voronoi problem every set is a single point which goes to the strictly
nearest site.  The value of a witness is the sum over players of the
(affine) dimension contributed by the points they win.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt, lcm
from typing import Sequence

from tropsec.geometry import (
    GramForm,
    InputError,
    Point,
    affine_dim,
    as_point,
    as_rational,
    dist_sq,
    rank,
)
from tropsec.models import PointConfig

PROBLEMS = ("linear", "affine", "voronoi")


class ProblemMismatchError(ValueError):
    """The problem cannot be posed on this configuration (e.g. Voronoi on non-singletons)."""


class CertificationError(ValueError):
    """The lift height is too small to certify the Voronoi-to-affine conversion."""

    def __init__(self, message: str, suggested_lift: Fraction):
        super().__init__(message)
        self.suggested_lift = suggested_lift


@dataclass(frozen=True)
class Witness:
    sites: tuple[Point, ...]
    offsets: tuple[Fraction, ...] | None = None

    def __post_init__(self):
        sites = tuple(as_point(s) for s in self.sites)
        if not sites:
            raise InputError("a witness needs at least one site")
        if len({len(s) for s in sites}) > 1:
            raise InputError("witness sites have mixed lengths")
        object.__setattr__(self, "sites", sites)
        if self.offsets is not None:
            offsets = tuple(as_rational(a) for a in self.offsets)
            if len(offsets) != len(sites):
                raise InputError(f"{len(offsets)} offsets for {len(sites)} sites")
            object.__setattr__(self, "offsets", offsets)

    @property
    def k(self) -> int:
        return len(self.sites)

    @property
    def dim(self) -> int:
        return len(self.sites[0])

    def scaled(self, factor) -> "Witness":
        f = as_rational(factor)
        offsets = None if self.offsets is None else tuple(a * f for a in self.offsets)
        return Witness(tuple(tuple(x * f for x in s) for s in self.sites), offsets)

    def translated(self, shift: Sequence) -> "Witness":
        shift = as_point(shift)
        return Witness(
            tuple(tuple(x + t for x, t in zip(s, shift)) for s in self.sites), self.offsets
        )


@dataclass(frozen=True)
class PartitionResult:
    problem: str
    winning_sets: tuple[tuple[str, ...], ...]
    winning_directions: tuple[tuple[Point, ...], ...]
    player_dims: tuple[int, ...]
    total: int
    ties: tuple[str, ...]
    minima: tuple[tuple[Fraction, ...], ...] | None = field(default=None, compare=False)

    @property
    def winner_of(self) -> dict[str, int]:
        return {lab: i for i, labs in enumerate(self.winning_sets) for lab in labs}


def _check_dims(config: PointConfig, w: Witness) -> None:
    if w.dim != config.ambient_dim:
        raise InputError(
            f"witness sites have length {w.dim}, configuration is {config.ambient_dim}-dimensional"
        )


def _den_lcm(values) -> int:
    return lcm(1, *(Fraction(x).denominator for x in values))


def _collect(
    problem: str,
    config: PointConfig,
    k: int,
    winners: list[tuple[int, Point] | None],
) -> PartitionResult:
    sets = [[] for _ in range(k)]
    dirs: list[list[Point]] = [[] for _ in range(k)]
    ties = []
    for (label, _), win in zip(config.sets, winners):
        if win is None:
            ties.append(label)
            continue
        i, alpha = win
        sets[i].append(label)
        if alpha not in dirs[i]:
            dirs[i].append(alpha)
    if problem == "linear":
        dims = [rank(d) for d in dirs]
    else:
        dims = [1 + affine_dim(d) for d in dirs]
    return PartitionResult(
        problem=problem,
        winning_sets=tuple(tuple(s) for s in sets),
        winning_directions=tuple(tuple(d) for d in dirs),
        player_dims=tuple(dims),
        total=sum(dims),
        ties=tuple(ties),
    )


def _strict_min_partition(
    config: PointConfig,
    sites: Sequence[Point],
    offsets: Sequence[Fraction] | None,
    keep_minima: bool,
):
    # Integer-scale everything: one common factor per side keeps comparisons exact.
    k = len(sites)
    offs = offsets if offsets is not None else [Fraction(0)] * k
    lv = _den_lcm([x for s in sites for x in s] + list(offs))
    lp = _den_lcm(x for _, pts in config.sets for p in pts for x in p)
    isites = [[int(x * lv) for x in s] for s in sites]
    ioffs = [int(a * lv * lp) for a in offs]
    scale = Fraction(1, lv * lp)
    winners = []
    minima = []
    for _, pts in config.sets:
        ipts = [(alpha, [int(x * lp) for x in alpha]) for alpha in pts]
        best = None
        best_pair = None
        unique = False
        row_min = []
        for i in range(k):
            s = isites[i]
            o = ioffs[i]
            pmin = None
            for alpha, ia in ipts:
                val = sum(a * x for a, x in zip(s, ia)) + o
                if pmin is None or val < pmin:
                    pmin = val
                if best is None or val < best:
                    best, best_pair, unique = val, (i, alpha), True
                elif val == best:
                    unique = False
            row_min.append(pmin)
        winners.append(best_pair if unique else None)
        if keep_minima:
            minima.append(tuple(Fraction(v) * scale for v in row_min))
    return winners, (tuple(minima) if keep_minima else None)


def eval_linear_partition(
    config: PointConfig, w: Witness, keep_minima: bool = False
) -> PartitionResult:
    """Value of the linear partition problem at ``w``: sum of ranks of winning directions."""
    if w.offsets is not None:
        raise InputError("the linear problem takes no offsets")
    _check_dims(config, w)
    winners, minima = _strict_min_partition(config, w.sites, None, keep_minima)
    res = _collect("linear", config, w.k, winners)
    return res if minima is None else _with_minima(res, minima)


def eval_affine_partition(
    config: PointConfig, w: Witness, keep_minima: bool = False
) -> PartitionResult:
    """Value of the affine partition problem: sum of 1 + affine dim of winning directions."""
    if w.offsets is None:
        raise InputError("the affine problem needs offsets")
    _check_dims(config, w)
    winners, minima = _strict_min_partition(config, w.sites, w.offsets, keep_minima)
    res = _collect("affine", config, w.k, winners)
    return res if minima is None else _with_minima(res, minima)


def _with_minima(res: PartitionResult, minima) -> PartitionResult:
    return PartitionResult(
        res.problem,
        res.winning_sets,
        res.winning_directions,
        res.player_dims,
        res.total,
        res.ties,
        minima,
    )


def voronoi_assignment(
    points: Sequence[Point], sites: Sequence[Point], g: GramForm | None = None
) -> list[int | None]:
    """Index of the strictly nearest site for each point, None on ties.

    Uses |v - a|^2 = v.Gv - 2 (Gv).a + a.Ga; the last term is common to all
    sites, so only the affine part is compared.
    """
    if not sites:
        return [None] * len(points)
    if g is None or g.is_identity:
        duals = [tuple(s) for s in sites]
        norms = [sum(x * x for x in s) for s in sites]
    else:
        duals = [g.apply(s) for s in sites]
        norms = [sum(a * b for a, b in zip(s, gs)) for s, gs in zip(sites, duals)]
    ld = _den_lcm([x for d in duals for x in d] + norms)
    lp = _den_lcm(x for p in points for x in p)
    idual = [[int(2 * x * ld) for x in d] for d in duals]
    inorm = [int(c * ld * lp) for c in norms]
    out = []
    for alpha in points:
        ia = [int(x * lp) for x in alpha]
        best = None
        who = None
        for i, (dv, c) in enumerate(zip(idual, inorm)):
            val = c - sum(a * b for a, b in zip(dv, ia))
            if best is None or val < best:
                best, who = val, i
            elif val == best:
                who = None
        out.append(who)
    return out


def eval_voronoi_partition(
    config: PointConfig, w: Witness, g: GramForm | None = None
) -> PartitionResult:
    """Value of the Voronoi partition problem with the inner product ``g``
    (standard when omitted)."""
    if not config.is_singleton:
        raise ProblemMismatchError("the Voronoi problem needs a configuration of singletons")
    if w.offsets is not None:
        raise InputError("the Voronoi problem takes no offsets")
    _check_dims(config, w)
    if g is not None and g.dim != config.ambient_dim:
        raise InputError(f"Gram form is {g.dim}-dimensional, points are {config.ambient_dim}")
    points = [pts[0] for _, pts in config.sets]
    owners = voronoi_assignment(points, w.sites, g)
    winners = [None if i is None else (i, p) for i, p in zip(owners, points)]
    return _collect("voronoi", config, w.k, winners)


def evaluate(
    problem: str, config: PointConfig, w: Witness, g: GramForm | None = None
) -> PartitionResult:
    if problem == "linear":
        return eval_linear_partition(config, w)
    if problem == "affine":
        return eval_affine_partition(config, w)
    if problem == "voronoi":
        return eval_voronoi_partition(config, w, g)
    raise InputError(f"unknown problem {problem!r}")


def project_config(
    config: PointConfig, matrix: Sequence[Sequence], translation: Sequence | None = None
) -> PointConfig:
    """Image of every A_b under x -> matrix @ x + translation."""
    mat = [as_point(r) for r in matrix]
    if any(len(r) != config.ambient_dim for r in mat):
        raise InputError(
            f"map expects {len(mat[0]) if mat else 0}-dim input, "
            f"configuration is {config.ambient_dim}-dimensional"
        )
    t = as_point(translation) if translation is not None else (Fraction(0),) * len(mat)
    if len(t) != len(mat):
        raise InputError("translation length does not match the map's output dimension")

    def image(p):
        return tuple(sum((a * x for a, x in zip(r, p)), Fraction(0)) + c for r, c in zip(mat, t))

    return PointConfig(
        len(mat), tuple((lab, tuple(image(p) for p in pts)) for lab, pts in config.sets)
    )


def affine_to_linear_witness(w: Witness, h: Sequence, c) -> Witness:
    """Fold offsets into the sites using a hyperplane <h, x> = c containing the support.

    On that hyperplane <v_i + (a_i/c) h, x> = <v_i, x> + a_i.
    """
    if w.offsets is None:
        raise InputError("witness has no offsets to fold in")
    h = as_point(h)
    c = as_rational(c)
    if c == 0:
        raise InputError("hyperplane must not pass through the origin (c = 0)")
    if len(h) != w.dim:
        raise InputError("hyperplane normal has the wrong length")
    return Witness(
        tuple(tuple(x + (a / c) * hx for x, hx in zip(s, h)) for s, a in zip(w.sites, w.offsets))
    )


def _inv_sqrt_bounds(n: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    # 1/sqrt(p/q) = sqrt(pq)/p
    p, q = n.numerator, n.denominator
    root = isqrt(p * q * 4**bits)
    den = 2**bits * p
    return Fraction(root, den), Fraction(root + 1, den)


def voronoi_to_affine_witness(
    config: PointConfig,
    w: Witness,
    g: GramForm | None = None,
    lift_height=64,
    max_bits: int = 1024,
) -> Witness:
    """Turn a Voronoi witness into an affine one whose winning sets contain the cells.

    Points are lifted to height M on a sphere-like slice; site i becomes the
    dual vector -r_i G v_i with offset -M^2 r_i, where r_i is a rational
    approximation of 1/|(v_i, M)|.  The approximation is refined until all
    strict inequalities between distances carry over; if they cannot at this
    M a :class:`CertificationError` suggesting a larger M is raised.
    """
    if w.offsets is not None:
        raise InputError("Voronoi witnesses carry no offsets")
    if not config.is_singleton:
        raise ProblemMismatchError("the Voronoi problem needs a configuration of singletons")
    _check_dims(config, w)
    g = g or GramForm.standard(config.ambient_dim)
    M = as_rational(lift_height)
    if M <= 0:
        raise InputError("lift height must be positive")
    points = [pts[0] for _, pts in config.sets]
    sites = w.sites
    k = len(sites)
    duals = [g.apply(s) for s in sites]
    norms = [sum(a * b for a, b in zip(s, d)) + M * M for s, d in zip(sites, duals)]
    # s[a][i] = (v_i, alpha) + M^2, the affine value is -r_i * s[a][i]
    svals = [[sum(x * y for x, y in zip(d, alpha)) + M * M for d in duals] for alpha in points]
    dvals = [[dist_sq(s, alpha, g) for s in sites] for alpha in points]
    required = [
        (a, i, j)
        for a in range(len(points))
        for i in range(k)
        for j in range(k)
        if i != j and dvals[a][i] < dvals[a][j]
    ]
    bits = 64
    while True:
        bounds = [_inv_sqrt_bounds(n, bits) for n in norms]
        r = [lo for lo, _ in bounds]
        failing = [
            (a, i, j) for a, i, j in required if not (-r[i] * svals[a][i] < -r[j] * svals[a][j])
        ]
        if not failing:
            break
        for a, i, j in failing:
            fi = _interval(svals[a][i], bounds[i])
            fj = _interval(svals[a][j], bounds[j])
            if fi[0] >= fj[1]:
                raise CertificationError(
                    f"lift height {M} too small: point {points[a]} is nearer site {i} "
                    f"than site {j} but the lifted comparison disagrees",
                    suggested_lift=2 * M,
                )
        bits *= 2
        if bits > max_bits:
            raise CertificationError(
                f"could not decide the lifted comparisons at lift height {M}",
                suggested_lift=2 * M,
            )
    new_sites = tuple(tuple(-ri * x for x in d) for ri, d in zip(r, duals))
    offsets = tuple(-M * M * ri for ri in r)
    return Witness(new_sites, offsets)


def _interval(s: Fraction, bounds: tuple[Fraction, Fraction]) -> tuple[Fraction, Fraction]:
    lo, hi = bounds
    if s >= 0:
        return -s * hi, -s * lo
    return -s * lo, -s * hi


def certify_voronoi_to_affine(
    config: PointConfig, w: Witness, g: GramForm | None = None, start_lift=1, max_lift=2**40
) -> tuple[Witness, Fraction]:
    """Double the lift height until :func:`voronoi_to_affine_witness` certifies."""
    M = as_rational(start_lift)
    while True:
        try:
            return voronoi_to_affine_witness(config, w, g, M), M
        except CertificationError as exc:
            M = exc.suggested_lift
            if M > max_lift:
                raise
