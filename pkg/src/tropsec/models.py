"""Monomial supports and dimension data for the classical cone families.

Each family comes with a parametrisation whose coordinate functions are
monomials (Veronese, Segre, Segre-Veronese) or maximal minors (Grassmannian).
The support of the b-th coordinate function is the point set ``A_b`` of a
:class:`PointConfig`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod
from typing import Iterable, Sequence

from tropsec.geometry import InputError, Point, as_point

FAMILIES = ("veronese", "binary_forms", "segre", "segre_veronese", "grassmannian")


@dataclass(frozen=True)
class PointConfig:
    """A labelled family of nonempty finite point sets in Q^ambient_dim."""

    ambient_dim: int
    sets: tuple[tuple[str, tuple[Point, ...]], ...]

    def __post_init__(self):
        cleaned = []
        labels = set()
        for label, points in self.sets:
            pts = []
            for p in points:
                p = as_point(p)
                if len(p) != self.ambient_dim:
                    raise InputError(
                        f"point {p} in set {label!r} has length {len(p)}, "
                        f"expected {self.ambient_dim}"
                    )
                if p not in pts:
                    pts.append(p)
            if not pts:
                raise InputError(f"set {label!r} is empty")
            if label in labels:
                raise InputError(f"duplicate label {label!r}")
            labels.add(label)
            cleaned.append((str(label), tuple(pts)))
        object.__setattr__(self, "sets", tuple(cleaned))

    def __len__(self) -> int:
        return len(self.sets)

    @property
    def labels(self) -> list[str]:
        return [label for label, _ in self.sets]

    @property
    def is_singleton(self) -> bool:
        return all(len(pts) == 1 for _, pts in self.sets)

    def all_points(self) -> list[Point]:
        """Every point of every set, in order, without repeats."""
        seen = {}
        for _, pts in self.sets:
            for p in pts:
                seen.setdefault(p, None)
        return list(seen)

    def points_of(self, label: str) -> tuple[Point, ...]:
        for lab, pts in self.sets:
            if lab == label:
                return pts
        raise KeyError(label)


def _config(ambient_dim: int, items: Iterable[tuple[str, Sequence]]) -> PointConfig:
    return PointConfig(ambient_dim, tuple((lab, tuple(pts)) for lab, pts in items))


def multi_indices(m: int, d: int) -> list[tuple[int, ...]]:
    """All alpha in N^m with |alpha| = d, in colexicographic order."""
    out = [
        c for c in itertools.product(range(d + 1), repeat=m) if sum(c) == d
    ]
    out.sort(key=lambda a: a[::-1])
    return out


def _mi_label(alpha: Sequence[int]) -> str:
    return ",".join(str(a) for a in alpha)


def _word_label(word: Sequence[int]) -> str:
    if all(x < 10 for x in word):
        return "".join(str(x) for x in word)
    return ".".join(str(x) for x in word)


def veronese_config(m: int, d: int) -> PointConfig:
    """Singletons {alpha} for the exponents of degree-d monomials in m variables."""
    if m < 2 or d < 1:
        raise InputError(f"veronese needs m >= 2 and d >= 1, got m={m}, d={d}")
    return _config(m, ((_mi_label(a), [a]) for a in multi_indices(m, d)))


def binary_forms_config(d: int) -> PointConfig:
    return veronese_config(2, d)


def segre_point(word: Sequence[int], m: int, reduced: bool = False) -> tuple[int, ...]:
    """Flattened d x m 0/1 matrix with a 1 at (i, word[i]); ``reduced`` drops
    the first column of every row, so for m = 2 the point is the word."""
    cols = range(1, m) if reduced else range(m)
    out = []
    for j in word:
        out.extend(int(j == c) for c in cols)
    return tuple(out)


def segre_config(d: int, m: int, reduced: bool = False) -> PointConfig:
    """Supports of the pure-tensor parametrisation of (K^m)^{tensor d}.

    Labels are the m-ary words (j_1, ..., j_d) of column indices.
    """
    if d < 1 or m < 2:
        raise InputError(f"segre needs d >= 1 and m >= 2, got d={d}, m={m}")
    dim = d * (m - 1) if reduced else d * m
    return _config(
        dim,
        (
            (_word_label(w), [segre_point(w, m, reduced)])
            for w in itertools.product(range(m), repeat=d)
        ),
    )


def segre_veronese_config(factors: Sequence[tuple[int, int]]) -> PointConfig:
    """Concatenated exponent vectors for a Segre product of Veronese embeddings."""
    factors = [tuple(f) for f in factors]
    if not factors:
        raise InputError("segre_veronese needs at least one factor")
    for mi, di in factors:
        if mi < 2 or di < 1:
            raise InputError(f"bad factor (m={mi}, d={di})")
    per_factor = [multi_indices(mi, di) for mi, di in factors]
    dim = sum(mi for mi, _ in factors)
    items = []
    for combo in itertools.product(*per_factor):
        label = "|".join(_mi_label(a) for a in combo)
        items.append((label, [tuple(itertools.chain.from_iterable(combo))]))
    return _config(dim, items)


def grassmann_config(m: int, d: int) -> PointConfig:
    """Supports of the maximal minors det(x_J) of a d x m matrix x.

    A_J holds the d! flattened d x m permutation patterns inside columns J.
    """
    if d < 1 or 2 * d > m:
        raise InputError(f"grassmannian needs 1 <= d <= m/2, got m={m}, d={d}")
    items = []
    for J in itertools.combinations(range(m), d):
        pts = []
        for perm in itertools.permutations(range(d)):
            mat = [0] * (d * m)
            for r in range(d):
                mat[r * m + J[perm[r]]] = 1
            pts.append(tuple(mat))
        label = "{" + ",".join(str(j + 1) for j in J) + "}"
        items.append((label, pts))
    return _config(d * m, items)


@dataclass(frozen=True)
class ModelDescriptor:
    """A cone family with its parameters.

    ``params`` is (m, d) for veronese and grassmannian, (d,) for binary forms,
    (d, m) for segre and a tuple of (m_i, d_i) pairs for segre_veronese.
    """

    family: str
    params: tuple

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InputError(f"unknown family {self.family!r}")
        params = tuple(tuple(p) if isinstance(p, (list, tuple)) else p for p in self.params)
        object.__setattr__(self, "params", params)
        self.config()  # validates parameters

    @classmethod
    def veronese(cls, m: int, d: int) -> "ModelDescriptor":
        return cls("veronese", (m, d))

    @classmethod
    def binary_forms(cls, d: int) -> "ModelDescriptor":
        return cls("binary_forms", (d,))

    @classmethod
    def segre(cls, d: int, m: int) -> "ModelDescriptor":
        return cls("segre", (d, m))

    @classmethod
    def segre_veronese(cls, factors: Sequence[tuple[int, int]]) -> "ModelDescriptor":
        return cls("segre_veronese", tuple(tuple(f) for f in factors))

    @classmethod
    def grassmannian(cls, m: int, d: int) -> "ModelDescriptor":
        return cls("grassmannian", (m, d))

    @property
    def factors(self) -> tuple[tuple[int, int], ...]:
        """The model as a list of (m_i, d_i) Veronese factors (monomial families only)."""
        if self.family == "veronese":
            return (self.params,)
        if self.family == "binary_forms":
            return ((2, self.params[0]),)
        if self.family == "segre":
            d, m = self.params
            return ((m, 1),) * d
        if self.family == "segre_veronese":
            return self.params
        raise ValueError("grassmannian is not a product of Veronese factors")

    @property
    def cone_dim(self) -> int:
        if self.family == "grassmannian":
            m, d = self.params
            return d * (m - d) + 1
        if self.family == "veronese":
            return self.params[0]
        return 1 + sum(mi - 1 for mi, _ in self.factors)

    @property
    def ambient_space_dim(self) -> int:
        if self.family == "grassmannian":
            m, d = self.params
            return comb(m, d)
        return prod(comb(di + mi - 1, mi - 1) for mi, di in self.factors)

    @property
    def param_dim(self) -> int:
        """Number of affine coordinates of the parametrising space."""
        if self.family == "grassmannian":
            m, d = self.params
            return d * m
        return sum(mi for mi, _ in self.factors)

    def config(self, reduced: bool = False) -> PointConfig:
        if self.family == "veronese":
            return veronese_config(*self.params)
        if self.family == "binary_forms":
            return binary_forms_config(*self.params)
        if self.family == "segre":
            return segre_config(*self.params, reduced=reduced)
        if self.family == "segre_veronese":
            return segre_veronese_config(self.params)
        return grassmann_config(*self.params)

    def to_dict(self) -> dict:
        params = [list(p) if isinstance(p, tuple) else p for p in self.params]
        return {"family": self.family, "params": params}

    @classmethod
    def from_dict(cls, data: dict) -> "ModelDescriptor":
        return cls(data["family"], tuple(data["params"]))


def model_dims(desc: ModelDescriptor) -> tuple[int, int]:
    """(dim C, dim V)."""
    return desc.cone_dim, desc.ambient_space_dim


def expected_secant_dim(desc: ModelDescriptor, k: int) -> int:
    if k < 1:
        raise InputError(f"k must be >= 1, got {k}")
    return min(k * desc.cone_dim, desc.ambient_space_dim)


def weight_plane(desc: ModelDescriptor) -> tuple[Point, Fraction]:
    """An affine hyperplane <h, x> = c (c != 0) containing the model's support.

    All exponents of one coordinate share the same degree, so h is the
    all-ones vector and c the total degree.
    """
    if desc.family == "grassmannian":
        m, d = desc.params
        return tuple(Fraction(1) for _ in range(d * m)), Fraction(d)
    dim = desc.param_dim
    return tuple(Fraction(1) for _ in range(dim)), Fraction(sum(di for _, di in desc.factors))
