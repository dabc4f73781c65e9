"""JSON forms of the library's values.

Rationals are written as bare integers or "p/q" strings in lowest terms, so
files never carry floats.  Every ``*_to_dict`` has a matching ``*_from_dict``
that returns an equal value.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from tropsec.bounds import PROBLEMS, PartitionResult, Witness
from tropsec.codes import CodeSpec
from tropsec.geometry import GramForm, InputError, as_point, as_rational
from tropsec.models import ModelDescriptor, PointConfig
from tropsec.oracle import OracleReport
from tropsec.search import SearchOutcome


def rat(x) -> int | str:
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def vec(p) -> list:
    return [rat(x) for x in p]


def _field(data: dict, key: str, kind: str):
    if not isinstance(data, dict):
        raise InputError(f"expected a JSON object for {kind}")
    if key not in data:
        raise InputError(f"{kind} JSON lacks {key!r}")
    return data[key]


def config_to_dict(config: PointConfig) -> dict:
    return {
        "ambient_dim": config.ambient_dim,
        "sets": [{"label": lab, "points": [vec(p) for p in pts]} for lab, pts in config.sets],
    }


def config_from_dict(data: dict) -> PointConfig:
    sets = _field(data, "sets", "config")
    dim = _field(data, "ambient_dim", "config")
    return PointConfig(
        int(dim),
        tuple(
            (str(_field(s, "label", "set")), tuple(as_point(p) for p in _field(s, "points", "set")))
            for s in sets
        ),
    )


def witness_to_dict(w: Witness) -> dict:
    out: dict[str, Any] = {"sites": [vec(s) for s in w.sites]}
    if w.offsets is not None:
        out["offsets"] = vec(w.offsets)
    return out


def witness_from_dict(data: dict) -> Witness:
    sites = _field(data, "sites", "witness")
    offsets = data.get("offsets")
    return Witness(
        tuple(as_point(s) for s in sites),
        None if offsets is None else tuple(as_rational(a) for a in offsets),
    )


def gram_to_dict(g: GramForm) -> dict:
    return {"matrix": [vec(r) for r in g.matrix]}


def gram_from_dict(data: dict) -> GramForm:
    return GramForm(tuple(as_point(r) for r in _field(data, "matrix", "gram")))


def _word(w) -> str:
    return "".join(str(x) for x in w) if all(x < 10 for x in w) else ".".join(map(str, w))


def _unword(s: str) -> tuple[int, ...]:
    return tuple(int(x) for x in (s.split(".") if "." in s else s))


def code_to_dict(code: CodeSpec) -> dict:
    return {"q": code.q, "length": code.length, "words": [_word(w) for w in code.codewords]}


def code_from_dict(data: dict) -> CodeSpec:
    words = _field(data, "words", "code")
    return CodeSpec(
        int(_field(data, "q", "code")),
        int(_field(data, "length", "code")),
        tuple(_unword(str(w)) for w in words),
    )


def result_to_dict(res: PartitionResult) -> dict:
    return {
        "problem": res.problem,
        "total": res.total,
        "player_dims": list(res.player_dims),
        "winning_sets": [list(s) for s in res.winning_sets],
        "winning_directions": [[vec(p) for p in d] for d in res.winning_directions],
        "ties": list(res.ties),
    }


def result_from_dict(data: dict) -> PartitionResult:
    problem = _field(data, "problem", "result")
    if problem not in PROBLEMS:
        raise InputError(f"unknown problem {problem!r}")
    return PartitionResult(
        problem=problem,
        winning_sets=tuple(tuple(s) for s in _field(data, "winning_sets", "result")),
        winning_directions=tuple(
            tuple(as_point(p) for p in d) for d in _field(data, "winning_directions", "result")
        ),
        player_dims=tuple(int(x) for x in _field(data, "player_dims", "result")),
        total=int(_field(data, "total", "result")),
        ties=tuple(_field(data, "ties", "result")),
    )


def outcome_to_dict(out: SearchOutcome) -> dict:
    return {
        "best_witness": witness_to_dict(out.best_witness),
        "best_result": result_to_dict(out.best_result),
        "trace": [[int(step), int(val)] for step, val in out.trace],
    }


def outcome_from_dict(data: dict) -> SearchOutcome:
    return SearchOutcome(
        witness_from_dict(_field(data, "best_witness", "outcome")),
        result_from_dict(_field(data, "best_result", "outcome")),
        tuple((int(s), int(v)) for s, v in _field(data, "trace", "outcome")),
    )


def model_to_dict(model: ModelDescriptor) -> dict:
    return model.to_dict()


def model_from_dict(data: dict) -> ModelDescriptor:
    return ModelDescriptor.from_dict(data)


def report_to_dict(rep: OracleReport) -> dict:
    return rep.to_dict()


def report_from_dict(data: dict) -> OracleReport:
    return OracleReport(
        model=model_from_dict(_field(data, "model", "report")),
        k=int(data["k"]),
        prime=int(data["prime"]),
        trials=int(data["trials"]),
        rank_per_trial=tuple(int(r) for r in data["rank_per_trial"]),
        reported_dim=int(data["reported_dim"]),
        matches_expected=bool(data["matches_expected"]),
        primes_used=tuple(int(p) for p in data.get("primes_used", [])),
    )


def dumps(obj: dict) -> str:
    """Canonical text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def load_json(path) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: not valid JSON ({exc.msg}, line {exc.lineno})") from exc
