"""Block codes, the closed-form bounds they give, and code-derived witnesses.

The bounds count tangent directions at torus-fixed points of the cone: rook
coverings for pure tensors, radius-2 transposition balls for Grassmannians,
and 1-distance-2 neighbourhoods of corners for Veronese embeddings.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from sympy import isprime

from tropsec.bounds import Witness
from tropsec.geometry import InputError, as_point
from tropsec.models import multi_indices, segre_point

Word = tuple[int, ...]


def hamming(u: Sequence[int], w: Sequence[int]) -> int:
    return sum(a != b for a, b in zip(u, w))


@dataclass(frozen=True)
class CodeSpec:
    q: int
    length: int
    codewords: tuple[Word, ...]
    min_distance: int = field(init=False)

    def __post_init__(self):
        if self.q < 2:
            raise InputError(f"alphabet size must be >= 2, got {self.q}")
        words = tuple(tuple(int(x) for x in w) for w in self.codewords)
        for w in words:
            if len(w) != self.length or any(not 0 <= x < self.q for x in w):
                raise InputError(f"word {w} is not in {{0..{self.q - 1}}}^{self.length}")
        if len(set(words)) != len(words):
            raise InputError("codewords must be distinct")
        object.__setattr__(self, "codewords", words)
        dist = min(
            (hamming(u, w) for u, w in itertools.combinations(words, 2)),
            default=self.length + 1,
        )
        object.__setattr__(self, "min_distance", dist)

    def __len__(self) -> int:
        return len(self.codewords)

    @property
    def alphabet_size(self) -> int:
        return self.q


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    mat = [[x % p for x in r] for r in rows]
    ncols = len(mat[0]) if mat else 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = pow(mat[r][c], -1, p)
        mat[r] = [x * inv % p for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [(x - f * y) % p for x, y in zip(mat[i], mat[r])]
        r += 1
    return r


def code_from_parity_check(h: Sequence[Sequence[int]], q: int) -> CodeSpec:
    """All words v in Z_q^d with h v = 0 (mod q), in lexicographic order."""
    if not isprime(q):
        raise InputError(f"parity-check codes need a prime alphabet size, got {q}")
    h = [list(r) for r in h]
    if not h:
        raise InputError("empty parity-check matrix")
    d = len(h[0])
    if any(len(r) != d for r in h):
        raise InputError("parity-check rows have mixed lengths")
    words = [
        w
        for w in itertools.product(range(q), repeat=d)
        if all(sum(a * b for a, b in zip(r, w)) % q == 0 for r in h)
    ]
    return CodeSpec(q, d, tuple(words))


def syndrome(h: Sequence[Sequence[int]], word: Sequence[int], q: int) -> Word:
    return tuple(sum(a * b for a, b in zip(r, word)) % q for r in h)


def hamming_ball(word: Word, q: int, radius: int = 1) -> set[Word]:
    ball = {tuple(word)}
    frontier = {tuple(word)}
    for _ in range(radius):
        nxt = set()
        for w in frontier:
            for i in range(len(w)):
                for a in range(q):
                    if a != w[i]:
                        nxt.add(w[:i] + (a,) + w[i + 1 :])
        ball |= nxt
        frontier = nxt
    return ball


def rook_cover(code: CodeSpec) -> set[Word]:
    covered = set()
    for w in code.codewords:
        covered |= hamming_ball(w, code.q, 1)
    return covered


def rook_bound(code: CodeSpec) -> int:
    """Number of board positions covered by rooks on the codewords."""
    return len(rook_cover(code))


def _weight(w: Sequence[int]) -> int:
    return sum(1 for x in w if x)


def _transpositions(w: Word) -> set[Word]:
    ones = [i for i, x in enumerate(w) if x]
    zeros = [i for i, x in enumerate(w) if not x]
    out = {w}
    for i in ones:
        for j in zeros:
            v = list(w)
            v[i], v[j] = 0, 1
            out.add(tuple(v))
    return out


def grassmann_code_bound(code: CodeSpec) -> int:
    """Weight-d words within Hamming distance 2 of a constant-weight-d binary code."""
    if code.q != 2:
        raise InputError("Grassmannian bound needs a binary code")
    weights = {_weight(w) for w in code.codewords}
    if len(weights) > 1:
        raise InputError(f"code is not constant weight (weights {sorted(weights)})")
    covered = set()
    for w in code.codewords:
        covered |= _transpositions(w)
    return len(covered)


def veronese_corner_bound(corner_indices: Iterable[int], m: int, d: int) -> int:
    """Number of degree-d exponents at 1-distance <= 2 from the corners d*e_i.

    ``corner_indices`` are 1-based.  For d >= 3 this is k*m; d = 2 is
    counted directly.
    """
    given = list(corner_indices)
    idx = sorted(set(given))
    if len(idx) != len(given):
        raise InputError("corner indices must be distinct")
    if any(not 1 <= i <= m for i in idx):
        raise InputError(f"corner indices must lie in 1..{m}")
    if d < 2:
        raise InputError("corner bound is defined for d >= 2")
    corners = []
    for i in idx:
        c = [0] * m
        c[i - 1] = d
        corners.append(c)
    return sum(
        1
        for a in multi_indices(m, d)
        if any(sum(abs(x - y) for x, y in zip(a, c)) <= 2 for c in corners)
    )


def veronese_corner_witness(corner_indices: Iterable[int], m: int, d: int) -> Witness:
    sites = []
    for i in corner_indices:
        c = [0] * m
        c[i - 1] = d
        sites.append(tuple(c))
    return Witness(tuple(sites))


def segre_site(word: Sequence[int], m: int, reduced: bool) -> tuple[int, ...]:
    """The Segre coordinates of a word (for m = 2 reduced, the word itself)."""
    return segre_point(word, m, reduced)


def code_to_segre_witness(
    code: CodeSpec, extra_sites: Sequence[Sequence] = (), reduced: bool | None = None
) -> Witness:
    """Sites at the images of the codewords, followed by ``extra_sites``.

    ``reduced`` defaults to True for binary codes and False otherwise,
    matching the default Segre coordinates.
    """
    if reduced is None:
        reduced = code.q == 2
    sites = [segre_site(w, code.q, reduced) for w in code.codewords]
    dim = code.length * (code.q - 1 if reduced else code.q)
    for s in extra_sites:
        s = as_point(s)
        if len(s) != dim:
            raise InputError(f"extra site of length {len(s)}, Segre coordinates have {dim}")
        sites.append(s)
    return Witness(tuple(sites))


def centre_site(length: int) -> tuple[Fraction, ...]:
    return (Fraction(1, 2),) * length


def greedy_constant_weight_code(m: int, d: int, min_dist: int) -> CodeSpec:
    """Lexicographic greedy binary code of length m, weight d, distance >= min_dist.

    Supports are scanned in the order of ``itertools.combinations``, so
    1..10..0 comes first.
    """
    if not 0 <= d <= m:
        raise InputError(f"weight {d} impossible for length {m}")
    kept: list[Word] = []
    for support in itertools.combinations(range(m), d):
        w = tuple(int(i in support) for i in range(m))
        if all(hamming(w, u) >= min_dist for u in kept):
            kept.append(w)
    return CodeSpec(2, m, tuple(kept))


def random_distance3_code(d: int, rng, attempts: int = 64) -> CodeSpec:
    """A random binary code of length d and minimum distance >= 3, grown by
    shuffled greedy insertion."""
    words = list(itertools.product((0, 1), repeat=d))
    order = rng.permutation(len(words))
    size_cap = int(rng.integers(1, attempts + 1))
    kept: list[Word] = []
    for idx in order:
        w = words[int(idx)]
        if all(hamming(w, u) >= 3 for u in kept):
            kept.append(w)
            if len(kept) >= size_cap:
                break
    return CodeSpec(2, d, tuple(kept))
