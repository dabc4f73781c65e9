from __future__ import annotations

import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import points, rationals
from tropsec.bounds import Witness, eval_affine_partition, eval_voronoi_partition
from tropsec.codes import CodeSpec, code_from_parity_check
from tropsec.geometry import GramForm, InputError
from tropsec.models import ModelDescriptor, PointConfig, grassmann_config, veronese_config
from tropsec.oracle import terracini_dim
from tropsec.search import SearchParams, anneal
from tropsec import serialize as S


def through_json(doc):
    return json.loads(S.dumps(doc))


def test_rationals_are_strings_or_ints():
    assert S.rat(Fraction(6, 4)) == "3/2"
    assert S.rat(Fraction(-4, 2)) == -2
    assert S.rat(Fraction(-1, 3)) == "-1/3"


@given(st.lists(st.tuples(st.text("abc", min_size=1, max_size=3),
                          st.lists(points(2), min_size=1, max_size=3)),
                min_size=1, max_size=4, unique_by=lambda t: t[0]))
def test_config_round_trip(items):
    config = PointConfig(2, tuple((lab, tuple(pts)) for lab, pts in items))
    assert S.config_from_dict(through_json(S.config_to_dict(config))) == config


@given(st.lists(points(3), min_size=1, max_size=4), st.booleans(), st.data())
def test_witness_round_trip(sites, with_offsets, data):
    offs = None
    if with_offsets:
        offs = tuple(data.draw(st.lists(rationals, min_size=len(sites), max_size=len(sites))))
    w = Witness(tuple(sites), offs)
    doc = through_json(S.witness_to_dict(w))
    assert ("offsets" in doc) == with_offsets
    assert S.witness_from_dict(doc) == w


def test_gram_round_trip():
    g = GramForm([[2, Fraction(1, 2)], [Fraction(1, 2), 1]])
    assert S.gram_from_dict(through_json(S.gram_to_dict(g))) == g


def test_code_round_trip():
    code = code_from_parity_check([[0, 0, 0, 1, 1, 1], [0, 1, 1, 0, 0, 1], [1, 0, 1, 0, 1, 0]], 2)
    doc = through_json(S.code_to_dict(code))
    assert doc["words"][1] == "001011" and doc["q"] == 2 and doc["length"] == 6
    assert S.code_from_dict(doc) == code
    big = CodeSpec(11, 2, ((10, 3), (0, 0)))
    assert S.code_from_dict(through_json(S.code_to_dict(big))) == big


def test_result_outcome_report_round_trip():
    config = grassmann_config(4, 2)
    res = eval_affine_partition(config, Witness(((1, 2, 3, 4, 5, 6, 7, 8),), (0,)))
    assert S.result_from_dict(through_json(S.result_to_dict(res))) == res
    res = eval_voronoi_partition(veronese_config(3, 2), Witness(((0, 0, 0), (2, 2, 2))))
    assert S.result_from_dict(through_json(S.result_to_dict(res))) == res
    out = anneal(veronese_config(3, 2), 2, "voronoi", SearchParams(restarts=1, steps=30))
    assert S.outcome_from_dict(through_json(S.outcome_to_dict(out))) == out
    for model in (ModelDescriptor.segre_veronese([(2, 2), (2, 1)]), ModelDescriptor.veronese(3, 2)):
        rep = terracini_dim(model, 2)
        assert S.report_from_dict(through_json(S.report_to_dict(rep))) == rep


def test_bad_documents():
    with pytest.raises(InputError):
        S.witness_from_dict({"points": []})
    with pytest.raises(InputError):
        S.witness_from_dict({"sites": [[0.5, 1]]})
    with pytest.raises(InputError):
        S.config_from_dict([])
    with pytest.raises(InputError):
        S.result_from_dict({"problem": "quadratic"})


def test_dumps_is_canonical():
    a = S.dumps({"b": 1, "a": [1, "1/2"]})
    assert a == S.dumps({"a": [1, "1/2"], "b": 1}) and a.endswith("\n")
