"""Exact rational linear algebra used by every evaluator.

Points are tuples of :class:`fractions.Fraction`.  Ranks and determinants go
through fraction-free (Bareiss) elimination on integer-scaled rows, so every
comparison made downstream is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

Point = tuple[Fraction, ...]


class InputError(ValueError):
    """Malformed input: mismatched lengths, bad rationals, bad Gram matrices."""


def as_rational(x) -> Fraction:
    """Convert an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused: every tie decision downstream must be exact.
    """
    if isinstance(x, bool):
        raise InputError(f"not a rational: {x!r}")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational: {x!r}") from exc
    raise InputError(f"not an exact rational: {x!r} ({type(x).__name__})")


def as_point(coords: Iterable) -> Point:
    return tuple(as_rational(c) for c in coords)


def _common_length(rows: Sequence[Sequence]) -> int:
    lengths = {len(r) for r in rows}
    if len(lengths) > 1:
        raise InputError(f"rows have mixed lengths {sorted(lengths)}")
    return lengths.pop() if lengths else 0


def integer_row(row: Sequence[Fraction]) -> list[int]:
    """Scale a rational row by the lcm of its denominators."""
    den = lcm(*(Fraction(x).denominator for x in row)) if row else 1
    return [int(Fraction(x) * den) for x in row]


def _bareiss_rank(mat: list[list[int]]) -> int:
    # Entries stay integral: after each step they are minors of the input.
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        p = mat[r][c]
        prow = mat[r]
        for i in range(r + 1, nrows):
            row = mat[i]
            a = row[c]
            for j in range(c + 1, ncols):
                row[j] = (row[j] * p - a * prow[j]) // prev
            row[c] = 0
        prev = p
        r += 1
    return r


def _bareiss_det(mat: list[list[int]]) -> int:
    n = len(mat)
    sign = 1
    prev = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if mat[i][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            mat[c], mat[piv] = mat[piv], mat[c]
            sign = -sign
        p = mat[c][c]
        for i in range(c + 1, n):
            a = mat[i][c]
            for j in range(c + 1, n):
                mat[i][j] = (mat[i][j] * p - a * mat[c][j]) // prev
            mat[i][c] = 0
        prev = p
    return sign * mat[n - 1][n - 1] if n else 1


def rank(rows: Sequence[Sequence]) -> int:
    """Rank over Q of the matrix with the given rows."""
    rows = list(rows)
    _common_length(rows)
    if not rows:
        return 0
    return _bareiss_rank([integer_row(as_point(r)) for r in rows])


def det(matrix: Sequence[Sequence]) -> Fraction:
    """Exact determinant of a square rational matrix."""
    n = len(matrix)
    if any(len(r) != n for r in matrix):
        raise InputError("determinant needs a square matrix")
    if n == 0:
        return Fraction(1)
    rat = [as_point(r) for r in matrix]
    den = lcm(*(x.denominator for r in rat for x in r))
    ints = [[int(x * den) for x in r] for r in rat]
    return Fraction(_bareiss_det(ints), den**n)


def affine_dim(points: Iterable[Sequence]) -> int:
    """Dimension of the affine span; the empty set has dimension -1."""
    pts = [as_point(p) for p in points]
    _common_length(pts)
    if not pts:
        return -1
    p0 = pts[0]
    diffs = [tuple(a - b for a, b in zip(p, p0)) for p in pts[1:]]
    return rank(diffs) if diffs else 0


@dataclass(frozen=True)
class GramForm:
    """A positive definite symmetric rational matrix defining an inner product."""

    matrix: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        mat = tuple(as_point(r) for r in self.matrix)
        object.__setattr__(self, "matrix", mat)
        n = len(mat)
        if n == 0 or any(len(r) != n for r in mat):
            raise InputError("Gram matrix must be square and nonempty")
        for i in range(n):
            for j in range(i):
                if mat[i][j] != mat[j][i]:
                    raise InputError("Gram matrix is not symmetric")
        for k in range(1, n + 1):
            if det([r[:k] for r in mat[:k]]) <= 0:
                raise InputError(
                    f"Gram matrix is not positive definite (leading minor {k})"
                )

    @classmethod
    def standard(cls, dim: int) -> "GramForm":
        return cls(tuple(tuple(Fraction(int(i == j)) for j in range(dim)) for i in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.matrix)

    @property
    def is_identity(self) -> bool:
        n = self.dim
        return all(self.matrix[i][j] == (i == j) for i in range(n) for j in range(n))

    def inner(self, u: Sequence, w: Sequence) -> Fraction:
        if len(u) != self.dim or len(w) != self.dim:
            raise InputError(
                f"vectors of length {len(u)}, {len(w)} against a {self.dim}-dim Gram form"
            )
        g = self.matrix
        return sum(
            (u[i] * g[i][j] * w[j] for i in range(self.dim) for j in range(self.dim)),
            Fraction(0),
        )

    def apply(self, u: Sequence) -> Point:
        """G u, i.e. the dual vector of u under this inner product."""
        return tuple(sum((gij * x for gij, x in zip(row, u)), Fraction(0)) for row in self.matrix)


def dist_sq(u: Sequence, w: Sequence, g: GramForm | None = None) -> Fraction:
    """Squared distance (u - w)^T G (u - w); the standard form when ``g`` is None."""
    u = as_point(u)
    w = as_point(w)
    if len(u) != len(w):
        raise InputError(f"points of length {len(u)} and {len(w)}")
    diff = tuple(a - b for a, b in zip(u, w))
    if g is None:
        return sum((x * x for x in diff), Fraction(0))
    return g.inner(diff, diff)


def solve(rows: Sequence[Sequence], rhs: Sequence) -> Point | None:
    """One rational solution of ``rows @ x = rhs``, or None when inconsistent."""
    rows = [list(as_point(r)) for r in rows]
    ncols = _common_length(rows)
    aug = [r + [as_rational(b)] for r, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(aug)) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        p = aug[r][c]
        aug[r] = [x / p for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    if any(row[-1] != 0 for row in aug[r:]):
        return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = aug[i][-1]
    return tuple(x)


def hyperplane_through(points: Iterable[Sequence]) -> tuple[Point, Fraction] | None:
    """Find (h, 1) with <h, p> = 1 for all points, i.e. an affine hyperplane
    containing every point and missing the origin; None if there is none."""
    pts = [as_point(p) for p in points]
    if not pts:
        return None
    h = solve(pts, [1] * len(pts))
    if h is None:
        return None
    return h, Fraction(1)
