"""Secant dimensions by Terracini's lemma over a large prime field.

dim kC is the rank of the differential of the addition map C^k -> kC at a
generic point, i.e. the rank of the stacked Jacobians of the parametrisation
at k random parameter points.  Working mod p gives a lower bound that is
exact away from a thin set of bad primes and special points.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np
from sympy import isprime, prevprime

from tropsec.models import ModelDescriptor, expected_secant_dim

DEFAULT_PRIME = 2147483647  # 2^31 - 1
SECOND_PRIME = 2147483629
PRIME_FLOOR = 2**20


class OracleError(ValueError):
    """The prime is unusable for this model; retry with another one."""


@dataclass(frozen=True)
class OracleReport:
    model: ModelDescriptor
    k: int
    prime: int
    trials: int
    rank_per_trial: tuple[int, ...]
    reported_dim: int
    matches_expected: bool
    primes_used: tuple[int, ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "model": self.model.to_dict(),
            "k": self.k,
            "prime": self.prime,
            "trials": self.trials,
            "rank_per_trial": list(self.rank_per_trial),
            "reported_dim": self.reported_dim,
            "matches_expected": self.matches_expected,
            "primes_used": list(self.primes_used),
        }


def _monomial_exponents(model: ModelDescriptor) -> list[tuple[int, ...]]:
    if model.family == "segre":
        d, m = model.params
        return [
            tuple(int(j == c) for j in w for c in range(m))
            for w in itertools.product(range(m), repeat=d)
        ]
    return [pts[0] for _, pts in model.config().sets]


def _det_mod_p(mat: list[list[int]], p: int) -> int:
    mat = [[x % p for x in r] for r in mat]
    n = len(mat)
    det = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if mat[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            mat[c], mat[piv] = mat[piv], mat[c]
            det = -det
        det = det * mat[c][c] % p
        inv = pow(mat[c][c], -1, p)
        for i in range(c + 1, n):
            f = mat[i][c] * inv % p
            if f:
                mat[i] = [(x - f * y) % p for x, y in zip(mat[i], mat[c])]
    return det % p


def jacobian_at(model: ModelDescriptor, point, p: int = DEFAULT_PRIME) -> np.ndarray:
    """The n x param_dim Jacobian of the coordinate functions at ``point``, mod p.

    Monomial families use the plain monomials x^alpha (the multinomial
    scalars only rescale rows and do not change ranks); Grassmannians use
    cofactor expansions of the maximal minors.
    """
    point = [int(x) % p for x in point]
    if len(point) != model.param_dim:
        raise ValueError(f"parameter point has length {len(point)}, expected {model.param_dim}")
    if model.family == "grassmannian":
        return _grassmann_jacobian(model, point, p)
    exps = _monomial_exponents(model)
    top = max(max(a) for a in exps)
    if p <= top:
        raise OracleError(f"prime {p} divides an exponent (max {top}); use a larger prime")
    rows = []
    for alpha in exps:
        alpha = [int(a) for a in alpha]
        row = []
        for j, aj in enumerate(alpha):
            if aj == 0:
                row.append(0)
                continue
            val = aj
            for t, at in enumerate(alpha):
                e = at - (t == j)
                if e:
                    val = val * pow(point[t], e, p) % p
            row.append(val)
        rows.append(row)
    return np.array(rows, dtype=np.int64)


def _grassmann_jacobian(model: ModelDescriptor, point: list[int], p: int) -> np.ndarray:
    m, d = model.params
    x = [point[r * m : (r + 1) * m] for r in range(d)]
    rows = []
    for J in itertools.combinations(range(m), d):
        row = [0] * (d * m)
        for r in range(d):
            for pos, c in enumerate(J):
                minor = [
                    [x[rr][cc] for cc in J if cc != c] for rr in range(d) if rr != r
                ]
                sign = -1 if (r + pos) % 2 else 1
                row[r * m + c] = sign * _det_mod_p(minor, p) % p
        rows.append(row)
    return np.array(rows, dtype=np.int64)


def rank_mod_p(mat: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over Z/p (p < 2^31 keeps products in int64)."""
    a = np.array(mat, dtype=np.int64) % p
    nrows, ncols = a.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = a[r] * inv % p
        below = a[r + 1 :, c].copy()
        if below.any():
            a[r + 1 :] = (a[r + 1 :] - np.outer(below, a[r]) % p) % p
        r += 1
    return r


def stacked_jacobian(model: ModelDescriptor, points, p: int) -> np.ndarray:
    return np.hstack([jacobian_at(model, pt, p) for pt in points])


def terracini_dim(
    model: ModelDescriptor,
    k: int,
    prime: int = DEFAULT_PRIME,
    trials: int = 3,
    seed: int = 0,
) -> OracleReport:
    """Lower bound on dim kC (generically exact): max over trials of the
    rank of k stacked Jacobians at random points of (Z_p^*)^param_dim.

    If the trials disagree, the same number of trials is rerun at the next
    smaller prime and folded into the maximum.
    """
    if k < 1 or trials < 1:
        raise ValueError("k and trials must be positive")
    if prime < PRIME_FLOOR or not isprime(prime) or prime >= 2**31:
        raise OracleError(f"need a prime in [2^20, 2^31), got {prime}")
    ranks = []
    primes = [prime]
    rng = np.random.default_rng([seed, k, prime])
    for _ in range(trials):
        pts = rng.integers(1, prime, size=(k, model.param_dim))
        ranks.append(rank_mod_p(stacked_jacobian(model, pts, prime), prime))
    if len(set(ranks)) > 1:
        alt = int(prevprime(prime))
        primes.append(alt)
        rng_alt = np.random.default_rng([seed, k, alt])
        for _ in range(trials):
            pts = rng_alt.integers(1, alt, size=(k, model.param_dim))
            ranks.append(rank_mod_p(stacked_jacobian(model, pts, alt), alt))
    reported = max(ranks)
    return OracleReport(
        model=model,
        k=k,
        prime=prime,
        trials=trials,
        rank_per_trial=tuple(ranks),
        reported_dim=reported,
        matches_expected=reported == expected_secant_dim(model, k),
        primes_used=tuple(primes),
    )
