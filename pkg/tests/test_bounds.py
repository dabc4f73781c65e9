from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

import naive
from strategies import point_lists, points, rationals, small_ints
from tropsec.bounds import (
    CertificationError,
    ProblemMismatchError,
    Witness,
    affine_to_linear_witness,
    certify_voronoi_to_affine,
    eval_affine_partition,
    eval_linear_partition,
    eval_voronoi_partition,
    project_config,
    voronoi_to_affine_witness,
)
from tropsec.codes import centre_site, code_from_parity_check, code_to_segre_witness
from tropsec.geometry import GramForm, InputError, affine_dim
from tropsec.models import (
    ModelDescriptor,
    PointConfig,
    binary_forms_config,
    grassmann_config,
    segre_config,
    veronese_config,
)

H = [[0, 0, 0, 1, 1, 1], [0, 1, 1, 0, 0, 1], [1, 0, 1, 0, 1, 0]]


def singleton_config(pts):
    return PointConfig(len(pts[0]), tuple((str(i), (p,)) for i, p in enumerate(pts)))


# -- linear ----------------------------------------------------------------


def test_dense_linear_map_is_stuck_at_one():
    m = 4
    basis = tuple(tuple(int(i == j) for j in range(m)) for i in range(m))
    config = PointConfig(m, tuple((f"b{b}", basis) for b in range(6)))
    for k in (1, 2, 3):
        sites = tuple(tuple(Fraction(3 * i + j * j + 1, 1 + i) for j in range(m)) for i in range(k))
        assert eval_linear_partition(config, Witness(sites)).total == 1


def test_linear_generic_single_site():
    res = eval_linear_partition(veronese_config(3, 2), Witness(((1, 10, 100),)))
    assert res.total == 3 and res.ties == ()


def test_equal_sites_tie():
    config = veronese_config(3, 2)
    res = eval_linear_partition(config, Witness(((1, 2, 3), (1, 2, 3))))
    assert res.total == 0 and len(res.ties) == 6
    res = eval_linear_partition(config, Witness(((1, 2, 3), (1, 2, 3), (0, 5, 5))))
    assert res.player_dims[:2] == (0, 0) and res.total > 0


def test_linear_strict_against_own_alternatives():
    # both points of the set give the same value for the only player
    config = PointConfig(2, (("a", ((1, 0), (0, 1))),))
    res = eval_linear_partition(config, Witness(((1, 1),)))
    assert res.ties == ("a",) and res.total == 0


def test_offsets_rejected_and_required():
    config = veronese_config(3, 2)
    with pytest.raises(InputError):
        eval_linear_partition(config, Witness(((1, 2, 3),), (0,)))
    with pytest.raises(InputError):
        eval_affine_partition(config, Witness(((1, 2, 3),)))
    with pytest.raises(InputError):
        eval_linear_partition(config, Witness(((1, 2),)))


def test_minima_diagnostic():
    res = eval_linear_partition(binary_forms_config(2), Witness(((0, 1), (1, 0))), keep_minima=True)
    # one row per set, one entry per player
    assert res.minima == ((0, 2), (1, 1), (2, 0))


# -- affine ----------------------------------------------------------------


def test_affine_grassmann_single_site_by_enumeration():
    config = grassmann_config(4, 2)
    v = tuple(Fraction((7 * i * i + 3 * i + 1) % 11, 1 + i % 3) for i in range(8))
    res = eval_affine_partition(config, Witness((v,), (0,)))
    chosen = []
    for _, pts in config.sets:
        vals = sorted((sum(a * b for a, b in zip(v, p)), p) for p in pts)
        assert vals[0][0] != vals[1][0]
        chosen.append(vals[0][1])
    assert res.total == 1 + affine_dim(chosen)


def test_affine_duplicate_pairs_contribute_nothing():
    res = eval_affine_partition(veronese_config(3, 2), Witness(((1, 2, 3), (1, 2, 3)), (5, 5)))
    assert res.player_dims == (0, 0)


def test_affine_to_linear_examples():
    w = Witness(((1, 2), (3, 4)), (0, 0))
    assert affine_to_linear_witness(w, (1, 1), 2).sites == w.sites
    config = binary_forms_config(2)
    w = Witness(((0, 0), (1, 1)), (0, -3))
    lin = affine_to_linear_witness(w, (1, 1), 2)
    assert lin.sites[1] == (Fraction(-1, 2), Fraction(-1, 2))
    a = eval_affine_partition(config, w)
    b = eval_linear_partition(config, lin)
    assert a.winning_sets == b.winning_sets
    with pytest.raises(InputError):
        affine_to_linear_witness(w, (1, 1), 0)


# -- voronoi ---------------------------------------------------------------


def test_voronoi_binary_forms_midpoints():
    config = binary_forms_config(3)
    w = Witness(((Fraction(1, 2), Fraction(5, 2)), (Fraction(5, 2), Fraction(1, 2))))
    res = eval_voronoi_partition(config, w)
    assert set(res.winning_directions[0]) == {(0, 3), (1, 2)}
    assert set(res.winning_directions[1]) == {(2, 1), (3, 0)}
    assert res.total == 4


def test_voronoi_segre_p1_6():
    code = code_from_parity_check(H, 2)
    w = code_to_segre_witness(code, [centre_site(6)])
    res = eval_voronoi_partition(segre_config(6, 2, reduced=True), w)
    assert res.total == 63 and res.ties == ()
    complements = {tuple(1 - x for x in c) for c in code.codewords}
    assert set(res.winning_directions[8]) == complements


def test_voronoi_mismatch_and_bad_gram():
    with pytest.raises(ProblemMismatchError):
        eval_voronoi_partition(grassmann_config(4, 2), Witness(((0,) * 8,)))
    with pytest.raises(InputError):
        eval_voronoi_partition(veronese_config(3, 2), Witness(((0, 0, 0),)), GramForm([[1]]))


def test_voronoi_gram_changes_cells():
    config = binary_forms_config(2)
    w = Witness(((0, 0), (2, 1)))
    std = eval_voronoi_partition(config, w)
    skew = eval_voronoi_partition(config, w, GramForm([[1, 0], [0, 9]]))
    assert std.winning_sets != skew.winning_sets


@given(point_lists(2, min_size=1, max_size=7, elems=small_ints), st.data())
def test_voronoi_matches_naive(pts, data):
    pts = list(dict.fromkeys(pts))
    config = singleton_config(pts)
    k = data.draw(st.integers(1, 3))
    sites = data.draw(st.lists(points(2), min_size=k, max_size=k))
    res = eval_voronoi_partition(config, Witness(tuple(sites)))
    cells, total = naive.voronoi(config, sites)
    assert res.total == total
    assert [set(d) for d in res.winning_directions] == [set(c) for c in cells]


@given(point_lists(2, min_size=1, max_size=7, elems=small_ints))
def test_single_site_takes_everything(pts):
    pts = list(dict.fromkeys(pts))
    res = eval_voronoi_partition(singleton_config(pts), Witness(((Fraction(1, 3), 7),)))
    assert res.total == 1 + affine_dim(pts)


@given(
    st.lists(st.lists(points(3, small_ints), min_size=1, max_size=3), min_size=1, max_size=5),
    st.lists(points(3), min_size=1, max_size=3),
    st.lists(small_ints, min_size=3, max_size=3),
)
def test_linear_and_affine_match_naive(sets, sites, offs):
    config = PointConfig(3, tuple((str(i), tuple(s)) for i, s in enumerate(sets)))
    w = Witness(tuple(sites))
    res = eval_linear_partition(config, w)
    wins, total = naive.partition(config, sites)
    assert [list(s) for s in res.winning_sets] == wins and res.total == total
    offs = offs[: len(sites)]
    res = eval_affine_partition(config, Witness(tuple(sites), tuple(offs)))
    wins, total = naive.partition(config, sites, offs, affine=True)
    assert [list(s) for s in res.winning_sets] == wins and res.total == total


@given(st.lists(points(3), min_size=1, max_size=4), st.sampled_from([Fraction(1, 3), 2, 7]))
def test_linear_scaling_invariance(sites, lam):
    config = veronese_config(3, 3)
    w = Witness(tuple(sites))
    a = eval_linear_partition(config, w)
    b = eval_linear_partition(config, w.scaled(lam))
    assert a == b


@given(st.lists(points(3), min_size=1, max_size=4), points(3, small_ints))
def test_voronoi_translation_invariance(sites, t):
    config = veronese_config(3, 3)
    moved = project_config(config, [[1, 0, 0], [0, 1, 0], [0, 0, 1]], t)
    w = Witness(tuple(sites))
    a = eval_voronoi_partition(config, w)
    b = eval_voronoi_partition(moved, w.translated(t))
    assert a.winning_sets == b.winning_sets and a.total == b.total


@given(st.sampled_from([ModelDescriptor.veronese(3, 3), ModelDescriptor.segre(2, 3),
                        ModelDescriptor.grassmannian(4, 2)]),
       st.data())
def test_totals_capped(desc, data):
    config = desc.config()
    k = data.draw(st.integers(1, 4))
    dim = config.ambient_dim
    sites = data.draw(st.lists(points(dim), min_size=k, max_size=k))
    offs = data.draw(st.lists(rationals, min_size=k, max_size=k))
    n = len(config)
    aff = affine_dim(config.all_points())
    lin = eval_linear_partition(config, Witness(tuple(sites)))
    assert lin.total <= min(n, k * dim)
    aff_res = eval_affine_partition(config, Witness(tuple(sites), tuple(offs)))
    assert aff_res.total <= min(n, k * (1 + aff))
    labels = [lab for s in aff_res.winning_sets for lab in s]
    assert len(labels) == len(set(labels))
    if config.is_singleton:
        assert eval_voronoi_partition(config, Witness(tuple(sites))).total <= min(n, k * (1 + aff))


# -- projections and conversions ---------------------------------------------


def test_project_config_examples():
    config = veronese_config(3, 2)
    ident = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert project_config(config, ident) == config
    g = grassmann_config(5, 2)
    colsum = [[int(j % 5 == c) for j in range(10)] for c in range(5)]
    img = project_config(g, colsum)
    assert img.is_singleton and len(img) == 10
    for label, (p,) in img.sets:
        J = {int(x) - 1 for x in label.strip("{}").split(",")}
        assert p == tuple(int(c in J) for c in range(5))
    with pytest.raises(InputError):
        project_config(config, [[1, 0]])


def test_voronoi_to_affine_single_site():
    config = veronese_config(3, 3)
    w = Witness(((1, 2, 3),))
    aw = voronoi_to_affine_witness(config, w, lift_height=1)
    assert eval_affine_partition(config, aw).total == eval_voronoi_partition(config, w).total == 3


def test_voronoi_to_affine_segre_p1_6():
    code = code_from_parity_check(H, 2)
    w = code_to_segre_witness(code, [centre_site(6)])
    config = segre_config(6, 2, reduced=True)
    aw, M = certify_voronoi_to_affine(config, w)
    assert M >= 1
    assert eval_affine_partition(config, aw).total >= 63


def test_voronoi_to_affine_keeps_bisector_ties():
    config = binary_forms_config(2)
    w = Witness(((2, 0), (0, 2)))  # mirror images; (1,1) is on the bisector
    vres = eval_voronoi_partition(config, w)
    aw, _ = certify_voronoi_to_affine(config, w)
    ares = eval_affine_partition(config, aw)
    assert "1,1" in vres.ties and "1,1" in ares.ties


def test_small_lift_is_refused_with_suggestion():
    config = singleton_config([(0, 0), (4, 0), (0, 4), (4, 4), (2, 2)])
    w = Witness(((0, 0), (40, 40)))
    try:
        voronoi_to_affine_witness(config, w, lift_height=Fraction(1, 64), max_bits=64)
    except CertificationError as exc:
        assert exc.suggested_lift == Fraction(1, 32)
    aw, M = certify_voronoi_to_affine(config, w, start_lift=Fraction(1, 64))
    vres = eval_voronoi_partition(config, w)
    ares = eval_affine_partition(config, aw)
    for cell, dirs in zip(vres.winning_directions, ares.winning_directions):
        assert set(cell) <= set(dirs)


@given(point_lists(2, min_size=1, max_size=6, elems=small_ints), st.data())
def test_voronoi_to_affine_domination(pts, data):
    pts = list(dict.fromkeys(pts))
    config = singleton_config(pts)
    k = data.draw(st.integers(1, 3))
    sites = data.draw(st.lists(points(2), min_size=k, max_size=k))
    assume(len(set(sites)) == k)
    w = Witness(tuple(sites))
    aw, _ = certify_voronoi_to_affine(config, w)
    vres = eval_voronoi_partition(config, w)
    ares = eval_affine_partition(config, aw)
    assert ares.total >= vres.total
    for cell, dirs in zip(vres.winning_directions, ares.winning_directions):
        assert set(cell) <= set(dirs)
