"""Command-line front end.

    tropsec generate --family veronese --m 3 --d 4 --output v34.json
    tropsec eval --problem voronoi --config v34.json --witness w.json
    tropsec search --config v34.json --k 5 --problem voronoi
    tropsec codes rook --parity-check 000111,011001,101010
    tropsec oracle --family segre --d 6 --m 2 --k 9
    tropsec reproduce veronese-m3 --dmax 8
    tropsec render --config v32.json --witness w.json --output fig.svg

Exit codes: 0 success, 1 reproduction mismatch, 2 usage or parse error,
3 the request does not fit the configuration.  With ``--output`` a
``<output>.manifest.json`` file records the command, input hashes, seed and
version next to the output.
"""

from __future__ import annotations

import argparse
import hashlib
import itertools
import json
import sys
from functools import lru_cache
from pathlib import Path

from tropsec import __version__
from tropsec.bounds import (
    PROBLEMS,
    CertificationError,
    ProblemMismatchError,
    Witness,
    eval_voronoi_partition,
    evaluate,
)
from tropsec.codes import (
    code_from_parity_check,
    code_to_segre_witness,
    centre_site,
    grassmann_code_bound,
    greedy_constant_weight_code,
    rook_bound,
    veronese_corner_bound,
    veronese_corner_witness,
)
from tropsec.geometry import InputError
from tropsec.models import ModelDescriptor, segre_config
from tropsec.oracle import DEFAULT_PRIME, SECOND_PRIME, OracleError, terracini_dim
from tropsec.render import ProjectionError, render_svg
from tropsec.search import (
    BudgetExceeded,
    ConstructionError,
    SearchParams,
    anneal,
    brute_force,
    bundled_veronese_sites,
    default_seeds,
    extend_veronese_witness,
    midpoint_chain_witness,
    pad_witness,
    perturb_witness,
    veronese_m3_value,
)
from tropsec.serialize import (
    code_to_dict,
    config_from_dict,
    config_to_dict,
    dumps,
    gram_from_dict,
    load_json,
    outcome_to_dict,
    report_to_dict,
    result_to_dict,
    witness_from_dict,
    witness_to_dict,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_SEMANTIC = 0, 1, 2, 3
P1_6_PARITY_CHECK = ((0, 0, 0, 1, 1, 1), (0, 1, 1, 0, 0, 1), (1, 0, 1, 0, 1, 0))

FAMILY_ALIASES = {
    "veronese": "veronese",
    "binary_forms": "binary_forms",
    "binary-forms": "binary_forms",
    "segre": "segre",
    "segre_veronese": "segre_veronese",
    "segre-veronese": "segre_veronese",
    "grassmann": "grassmannian",
    "grassmannian": "grassmannian",
}


class UsageError(Exception):
    pass


# -- helpers ---------------------------------------------------------------


def _sha256(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _factors(text: str) -> tuple[tuple[int, int], ...]:
    # "2,2;2,1" -> ((2, 2), (2, 1))
    try:
        return tuple(tuple(int(x) for x in f.split(",")) for f in text.split(";"))
    except ValueError as exc:
        raise UsageError(f"bad --factors {text!r}; expected e.g. '2,2;2,1'") from exc


def _model(args) -> ModelDescriptor:
    fam = FAMILY_ALIASES.get(args.family)
    if fam is None:
        raise UsageError(f"unknown family {args.family!r}")

    def need(name):
        val = getattr(args, name)
        if val is None:
            raise UsageError(f"--{name} is required for family {args.family}")
        return val

    if fam == "veronese":
        return ModelDescriptor.veronese(need("m"), need("d"))
    if fam == "binary_forms":
        return ModelDescriptor.binary_forms(need("d"))
    if fam == "segre":
        return ModelDescriptor.segre(need("d"), need("m"))
    if fam == "segre_veronese":
        return ModelDescriptor.segre_veronese(_factors(need("factors")))
    return ModelDescriptor.grassmannian(need("m"), need("d"))


def _add_model_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", required=True, choices=sorted(FAMILY_ALIASES))
    p.add_argument("--m", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--factors", help="segre_veronese factors as 'm1,d1;m2,d2'")


def _load_config(path):
    return config_from_dict(load_json(path))


def _load_witness(path):
    return witness_from_dict(load_json(path))


class Run:
    """Collects inputs and writes the output plus its manifest."""

    def __init__(self, args, command: str):
        self.args = args
        self.command = command
        self.inputs: dict[str, str] = {}

    def read(self, path):
        self.inputs[str(path)] = _sha256(path)
        return path

    def emit(self, text: str) -> None:
        out = getattr(self.args, "output", None)
        if not out:
            sys.stdout.write(text)
            return
        Path(out).write_text(text, encoding="utf-8")
        manifest = {
            "command": self.command,
            "argv": self.args.argv,
            "inputs": dict(sorted(self.inputs.items())),
            "seed": self.args.seed,
            "artifact_version": __version__,
            "outputs": [str(out)],
        }
        Path(f"{out}.manifest.json").write_text(dumps(manifest), encoding="utf-8")


# -- commands --------------------------------------------------------------


def cmd_generate(args) -> int:
    model = _model(args)
    config = model.config(reduced=args.reduced)
    print(
        f"{len(config)} sets, ambient dimension {config.ambient_dim}",
        file=sys.stderr if not args.output else sys.stdout,
    )
    Run(args, "generate").emit(dumps(config_to_dict(config)))
    return EXIT_OK


def cmd_eval(args) -> int:
    run = Run(args, "eval")
    config = _load_config(run.read(args.config))
    w = _load_witness(run.read(args.witness))
    g = gram_from_dict(load_json(run.read(args.gram))) if args.gram else None
    if args.perturb:
        if args.problem != "voronoi":
            raise ProblemMismatchError("--perturb applies to the voronoi problem")
        w = perturb_witness(w, config, g)
    res = evaluate(args.problem, config, w, g)
    doc = result_to_dict(res)
    if args.perturb:
        doc["witness"] = witness_to_dict(w)
    run.emit(dumps(doc))
    return EXIT_OK


def _candidates(source: str, config, run: Run) -> list:
    pts = config.all_points()
    if source == "points":
        return pts
    if source == "midpoints":
        mids = {
            tuple((a + b) / 2 for a, b in zip(p, q)) for p, q in itertools.combinations(pts, 2)
        }
        return sorted(set(pts) | mids)
    return list(_load_witness(run.read(source)).sites)


def cmd_search(args) -> int:
    run = Run(args, "search")
    config = _load_config(run.read(args.config))
    g = gram_from_dict(load_json(run.read(args.gram))) if args.gram else None
    if args.method == "brute":
        cands = _candidates(args.candidates, config, run)
        out = brute_force(config, args.k, args.problem, cands, g, budget=args.budget)
    else:
        params = SearchParams(seed=args.seed, restarts=args.restarts, steps=args.steps)
        seeds = [_load_witness(run.read(s)) for s in args.seed_witness or []]
        if not seeds and args.problem == "voronoi":
            seeds = default_seeds(config, args.k)
        out = anneal(config, args.k, args.problem, params, seeds, g, jobs=args.jobs)
    run.emit(dumps(outcome_to_dict(out)))
    return EXIT_OK


def _parse_rows(text: str) -> list[list[int]]:
    rows = [r.strip() for r in text.split(",") if r.strip()]
    try:
        return [[int(c) for c in r] for r in rows]
    except ValueError as exc:
        raise UsageError(f"bad parity-check rows {text!r}") from exc


def cmd_codes(args) -> int:
    run = Run(args, "codes")
    if args.kind == "rook":
        h = _parse_rows(args.parity_check) if args.parity_check else P1_6_PARITY_CHECK
        code = code_from_parity_check(h, args.q)
        doc = {"kind": "rook", "code": code_to_dict(code), "min_distance": code.min_distance,
               "bound": rook_bound(code)}
    elif args.kind == "grassmann":
        if args.m is None or args.d is None:
            raise UsageError("grassmann needs --m and --d")
        code = greedy_constant_weight_code(args.m, args.d, args.min_dist)
        doc = {"kind": "grassmann", "code": code_to_dict(code),
               "min_distance": code.min_distance, "bound": grassmann_code_bound(code)}
    else:
        if args.m is None or args.d is None:
            raise UsageError("veronese-corner needs --m and --d")
        corners = [int(c) for c in args.corners.split(",")] if args.corners else list(
            range(1, args.m + 1)
        )
        doc = {"kind": "veronese-corner", "corners": corners,
               "bound": veronese_corner_bound(corners, args.m, args.d)}
    print(f"bound {doc['bound']}", file=sys.stderr)
    run.emit(dumps(doc))
    return EXIT_OK


def cmd_oracle(args) -> int:
    model = _model(args)
    rep = terracini_dim(model, args.k, prime=args.prime, trials=args.trials, seed=args.seed)
    Run(args, "oracle").emit(dumps(report_to_dict(rep)))
    return EXIT_OK


def cmd_render(args) -> int:
    run = Run(args, "render")
    config = _load_config(run.read(args.config))
    w = _load_witness(run.read(args.witness))
    g = gram_from_dict(load_json(run.read(args.gram))) if args.gram else None
    run.emit(render_svg(config, w, g))
    return EXIT_OK


# -- reproduce -------------------------------------------------------------


def _oracle_dim(model, k, seed) -> tuple[int, bool]:
    a = terracini_dim(model, k, prime=DEFAULT_PRIME, seed=seed).reported_dim
    b = terracini_dim(model, k, prime=SECOND_PRIME, seed=seed + 1).reported_dim
    return a, a == b


def _row(rows, case, expected, tropical, oracle, stable=True):
    ok = tropical == expected and oracle == expected and stable
    rows.append({"case": case, "expected": expected, "tropical": tropical,
                 "oracle": oracle, "primes_agree": stable, "pass": ok})


def _repro_binary_forms(args) -> list[dict]:
    rows: list[dict] = []
    params = SearchParams(seed=args.seed, restarts=1, steps=50)
    for d in range(1, args.dmax + 1):
        config = ModelDescriptor.binary_forms(d).config()
        for k in range(1, (d + 1) // 2 + 2):
            out = anneal(config, k, "voronoi", params, [midpoint_chain_witness(d, k)])
            oracle, stable = _oracle_dim(ModelDescriptor.binary_forms(d), k, args.seed)
            _row(rows, f"d={d} k={k}", min(2 * k, d + 1), out.best_result.total, oracle, stable)
    return rows


@lru_cache(maxsize=None)
def _veronese_sites(d: int) -> tuple:
    if d <= 8:
        return tuple(bundled_veronese_sites(d))
    src = d - 6 if d % 3 == 2 else d - 2
    return extend_veronese_witness(Witness(_veronese_sites(src)), d).sites


def _repro_veronese(args) -> list[dict]:
    rows: list[dict] = []
    for d in range(1, args.dmax + 1):
        config = ModelDescriptor.veronese(3, d).config()
        sites = _veronese_sites(d)
        n = len(config)
        # every k up to the first one that fills the ambient space, plus one more
        for k in range(1, -(-n // 3) + 2):
            total = eval_voronoi_partition(config, pad_witness(sites, k, d)).total
            oracle, stable = _oracle_dim(ModelDescriptor.veronese(3, d), k, args.seed)
            _row(rows, f"d={d} k={k}", veronese_m3_value(d, k), total, oracle, stable)
    return rows


def _repro_segre(args) -> list[dict]:
    rows: list[dict] = []
    code = code_from_parity_check(P1_6_PARITY_CHECK, 2)
    rows.append({"case": "codewords", "expected": 8, "value": len(code), "pass": len(code) == 8})
    rows.append({"case": "min distance", "expected": 3, "value": code.min_distance,
                 "pass": code.min_distance == 3})
    rb = rook_bound(code)
    rows.append({"case": "rook bound", "expected": 56, "value": rb, "pass": rb == 56})
    config = segre_config(6, 2, reduced=True)
    w = code_to_segre_witness(code, [centre_site(6)])
    res = eval_voronoi_partition(config, w)
    complements = sorted("".join(str(1 - x) for x in c) for c in code.codewords)
    centre = sorted(res.winning_sets[8])
    rows.append({"case": "centre cell", "expected": complements, "value": centre,
                 "pass": centre == complements})
    oracle, stable = _oracle_dim(ModelDescriptor.segre(6, 2), 9, args.seed)
    _row(rows, "dim 9C", 63, res.total, oracle, stable)
    return rows


def _repro_code_bounds(args) -> list[dict]:
    rows: list[dict] = []
    for m in (2, 3, 4):
        for d in (2, 3, 4):
            config = ModelDescriptor.veronese(m, d).config()
            for k in range(1, m + 1):
                idx = list(range(1, k + 1))
                bound = veronese_corner_bound(idx, m, d)
                w = perturb_witness(veronese_corner_witness(idx, m, d), config)
                total = eval_voronoi_partition(config, w).total
                rows.append({"case": f"veronese m={m} d={d} k={k}", "bound": bound,
                             "value": total, "pass": total >= bound})
    code = code_from_parity_check(P1_6_PARITY_CHECK, 2)
    total = eval_voronoi_partition(
        segre_config(6, 2, reduced=True),
        perturb_witness(code_to_segre_witness(code), segre_config(6, 2, reduced=True)),
    ).total
    rows.append({"case": "segre d=6 parity-check code", "bound": rook_bound(code),
                 "value": total, "pass": total >= rook_bound(code)})
    for m in (4, 5, 6):
        code = greedy_constant_weight_code(m, 2, 4)
        model = ModelDescriptor.grassmannian(m, 2)
        bound = grassmann_code_bound(code)
        oracle, stable = _oracle_dim(model, len(code), args.seed)
        rows.append({"case": f"grassmannian m={m} d=2 k={len(code)}", "bound": bound,
                     "value": oracle, "pass": stable and bound <= oracle})
    return rows


REPRODUCERS = {
    "binary-forms": (_repro_binary_forms, 12),
    "veronese-m3": (_repro_veronese, 8),
    "segre-p1-6": (_repro_segre, 0),
    "code-bounds": (_repro_code_bounds, 0),
}


def _table(rows: list[dict]) -> str:
    keys = list(dict.fromkeys(k for r in rows for k in r))
    cells = [[str(r.get(k, "")) for k in keys] for r in rows]
    widths = [max(len(k), *(len(c[i]) for c in cells)) for i, k in enumerate(keys)]
    lines = ["  ".join(k.ljust(w) for k, w in zip(keys, widths))]
    lines += ["  ".join(c.ljust(w) for c, w in zip(row, widths)) for row in cells]
    return "\n".join(lines)


def cmd_reproduce(args) -> int:
    fn, default_dmax = REPRODUCERS[args.target]
    if args.dmax is None:
        args.dmax = default_dmax
    rows = fn(args)
    failed = [r for r in rows if not r["pass"]]
    print(_table(rows if not failed or args.verbose else failed), file=sys.stderr)
    status = "PASS" if not failed else f"FAIL ({len(failed)} of {len(rows)} rows)"
    print(f"reproduce {args.target}: {status}", file=sys.stderr)
    doc = {"target": args.target, "dmax": args.dmax, "passed": not failed, "rows": rows}
    Run(args, "reproduce").emit(dumps(doc))
    return EXIT_OK if not failed else EXIT_MISMATCH


# -- parser ----------------------------------------------------------------


def _global_flags(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--seed", type=int, default=d(0))
    p.add_argument("--jobs", type=int, default=d(1))
    p.add_argument("--output", default=d(None), help="write here instead of stdout")
    p.add_argument("--format", choices=["json"], default=d("json"))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tropsec", description="Tropical secant-dimension bounds.")
    p.add_argument("--version", action="version", version=f"tropsec {__version__}")
    _global_flags(p, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sp = p.add_subparsers(dest="cmd", metavar="COMMAND")

    g = sp.add_parser("generate", parents=[common], help="write a point configuration")
    _add_model_args(g)
    g.add_argument("--reduced", action="store_true", help="reduced Segre coordinates")
    g.set_defaults(func=cmd_generate)

    e = sp.add_parser("eval", parents=[common], help="evaluate a witness")
    e.add_argument("--problem", choices=PROBLEMS, default="voronoi")
    e.add_argument("--config", required=True)
    e.add_argument("--witness", required=True)
    e.add_argument("--gram")
    e.add_argument("--perturb", action="store_true", help="resolve Voronoi ties first")
    e.set_defaults(func=cmd_eval)

    s = sp.add_parser("search", parents=[common], help="search for a good witness")
    s.add_argument("--problem", choices=PROBLEMS, default="voronoi")
    s.add_argument("--config", required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--gram")
    s.add_argument("--method", choices=["anneal", "brute"], default="anneal")
    s.add_argument("--candidates", default="midpoints",
                   help="'points', 'midpoints' or a witness file of candidate sites")
    s.add_argument("--budget", type=int, default=10**6)
    s.add_argument("--restarts", type=int, default=4)
    s.add_argument("--steps", type=int, default=1500)
    s.add_argument("--seed-witness", action="append", help="starting witness file")
    s.set_defaults(func=cmd_search)

    c = sp.add_parser("codes", parents=[common], help="code-derived bounds")
    c.add_argument("kind", choices=["rook", "grassmann", "veronese-corner"])
    c.add_argument("--parity-check", help="rows like 000111,011001,101010")
    c.add_argument("--q", type=int, default=2)
    c.add_argument("--m", type=int)
    c.add_argument("--d", type=int)
    c.add_argument("--min-dist", type=int, default=4)
    c.add_argument("--corners", help="1-based corner indices, e.g. 1,2")
    c.set_defaults(func=cmd_codes)

    o = sp.add_parser("oracle", parents=[common], help="Terracini rank over a prime field")
    _add_model_args(o)
    o.add_argument("--k", type=int, required=True)
    o.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    o.add_argument("--trials", type=int, default=3)
    o.set_defaults(func=cmd_oracle)

    r = sp.add_parser("reproduce", parents=[common], help="check the headline values")
    r.add_argument("target", choices=sorted(REPRODUCERS))
    r.add_argument("--dmax", type=int)
    r.add_argument("--verbose", action="store_true", help="print every row")
    r.set_defaults(func=cmd_reproduce)

    v = sp.add_parser("render", parents=[common], help="SVG of a planar partition")
    v.add_argument("--config", required=True)
    v.add_argument("--witness", required=True)
    v.add_argument("--gram")
    v.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if not getattr(args, "func", None):
        parser.print_help(sys.stderr)
        return EXIT_USAGE
    args.argv = argv
    try:
        return args.func(args)
    except (ProblemMismatchError, ProjectionError, ConstructionError, CertificationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC
    except (UsageError, InputError, OracleError, BudgetExceeded, OSError, KeyError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
