"""Batch command-line front end.

Exit codes: 0 computed, 2 input error, 3 precondition violated,
4 budget or time limit hit (partial output is still printed).
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Any

from . import cube
from . import io as mio
from ._budget import BudgetExceeded, Deadline
from .complexes import (bound_report, build_complex, prepare, verify_cover_conditions)
from .configurations import circuits, graph_circuits, graph_configuration
from .grading import (Grading, finest_grading, finest_grading_below, is_equivalent,
                      is_positive, is_specialization, join, meet,
                      positive_integer_specialization)
from .linalg import Lattice, VectorConfiguration, group_structure, saturate, snf

EXIT_OK, EXIT_INPUT, EXIT_PRECONDITION, EXIT_BUDGET = 0, 2, 3, 4

COMMANDS = ("snf", "saturate", "grading-check", "meet", "join", "finest", "positive",
            "circuits", "nonfaces", "complex", "bounds", "verify-cover")


class PreconditionError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise mio.ParseError(f"cannot read {path}: {exc}") from exc


def _source(args) -> VectorConfiguration:
    if getattr(args, "graph", None):
        return graph_configuration(mio.parse_graph(_read(args.graph)))
    if getattr(args, "config", None):
        return mio.parse_configuration(_read(args.config))
    if getattr(args, "grading", None):
        g = mio.parse_grading(_read(args.grading[0]))
        return g.configuration
    raise mio.ParseError("one of --graph, --config or --grading is required")


def _target(args, source: VectorConfiguration) -> VectorConfiguration | None:
    spec = args.spec
    if spec in (None, "identity"):
        return None
    if spec == "zero":
        return VectorConfiguration(0, tuple(() for _ in source.columns))
    cfg = mio.parse_configuration(_read(spec))
    if cfg.n != source.n:
        raise PreconditionError(f"--spec has {cfg.n} columns, the source has {source.n}")
    if cfg.labels is None and source.labels is not None:
        cfg = VectorConfiguration(cfg.ambient_dim, cfg.columns, source.labels)
    return cfg


def _prepare(args, source, target, deadline):
    try:
        return prepare(source, target, deadline=deadline)
    except ValueError as exc:
        raise PreconditionError(str(exc)) from exc


def _gens(args, n: int) -> dict[str, list]:
    out = {}
    for path in args.gens or []:
        polys = mio.parse_polynomials(_read(path), n)
        out[Path(path).stem] = polys
    return out


def _emit(args, payload: dict[str, Any], text: str | None = None) -> None:
    if args.format == "json" or text is None:
        sys.stdout.write(mio.dumps(payload))
    else:
        sys.stdout.write(text)


def _grading_dict(g: Grading) -> dict[str, Any]:
    return {"n": g.n, "relation_lattice": g.relation_lattice.matrix(), "rank": g.relation_lattice.rank,
            "group": str(g.group)}


def cmd_snf(args) -> int:
    rows, c = mio.parse_matrix(_read(args.matrix))
    res = snf(rows, c)
    payload = {"diag": list(res.diag), "U": res.U, "Q": res.Q}
    text = ("diag " + " ".join(map(str, res.diag)) + "\nU\n" + mio.format_matrix(res.U, len(rows))
            + "Q\n" + mio.format_matrix(res.Q, c))
    _emit(args, payload, text)
    return EXIT_OK


def cmd_saturate(args) -> int:
    rows, c = mio.parse_matrix(_read(args.matrix))
    lat = Lattice.from_generators(rows, c)
    sat = saturate(lat)
    payload = {"lattice": lat.matrix(), "saturation": sat.matrix(), "group": str(group_structure(lat)),
               "saturated": sat == lat}
    _emit(args, payload, mio.format_lattice(sat))
    return EXIT_OK


def _two_gradings(args) -> tuple[Grading, Grading]:
    if len(args.grading) != 2:
        raise mio.ParseError("exactly two --grading files are required")
    a, b = (mio.parse_grading(_read(p)) for p in args.grading)
    if a.n != b.n:
        raise PreconditionError("gradings on different numbers of variables")
    return a, b


def cmd_grading_check(args) -> int:
    f, g = _two_gradings(args)
    payload = {
        "first": _grading_dict(f), "second": _grading_dict(g),
        "first_specializes_second": is_specialization(f, g),
        "second_specializes_first": is_specialization(g, f),
        "equivalent": is_equivalent(f, g),
    }
    text = "\n".join(f"{k}: {v}" for k, v in payload.items() if not isinstance(v, dict)) + "\n"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_meet_join(args) -> int:
    f, g = _two_gradings(args)
    h = meet(f, g) if args.command == "meet" else join(f, g)
    _emit(args, _grading_dict(h), mio.format_grading(h))
    return EXIT_OK


def cmd_finest(args) -> int:
    polys = mio.parse_polynomials(_read(args.polys))
    if not polys:
        raise mio.ParseError("no polynomials given")
    n = polys[0].n
    if args.grading:
        g = mio.parse_grading(_read(args.grading[0]))
        if g.n != n:
            raise PreconditionError("grading and polynomials have different numbers of variables")
        h = finest_grading_below(polys, g)
    else:
        h = finest_grading(polys, n)
    _emit(args, _grading_dict(h), mio.format_grading(h))
    return EXIT_OK


def cmd_positive(args) -> int:
    if getattr(args, "grading", None):
        g = mio.parse_grading(_read(args.grading[0]))
    else:
        g = Grading.from_configuration(_source(args))
    w = is_positive(g)
    payload: dict[str, Any] = {"positive": w.positive}
    if w.positive:
        payload["covector"] = [str(x) for x in w.covector]
        payload["integer_specialization"] = list(positive_integer_specialization(g))
    else:
        payload["violating_vector"] = list(w.violating)
    text = "\n".join(f"{k}: {v}" for k, v in payload.items()) + "\n"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_circuits(args) -> int:
    cfg = _source(args)
    budget = args.budget if args.budget is not None else 20
    cs = circuits(cfg, budget=budget)
    if getattr(args, "graph", None):
        g = mio.parse_graph(_read(args.graph))
        if g.is_bipartite() and set(graph_circuits(g)) != set(cs):
            raise AssertionError("cycle enumeration disagrees with kernel enumeration")
    rows = [list(c.vector) for c in cs]
    payload = {"count": len(cs), "vectors": rows, "binomials": [c.binomial(cfg.labels) for c in cs]}
    text = mio.format_matrix(rows, cfg.n) + "".join(c.binomial(cfg.labels) + "\n" for c in cs)
    _emit(args, payload, text)
    return EXIT_OK


def cmd_nonfaces(args) -> int:
    cfg = _source(args)
    deadline = Deadline(args.time_limit)
    data = _prepare(args, cfg, None, deadline)
    sets = [[data.rays.columns[j] + 1 for j in E] for E in data.family.minimal_nonfaces]
    payload = {"rays": [c + 1 for c in data.rays.columns], "minimal_nonfaces": sets,
               "labels": list(data.labels),
               "duplicates": [[list(a), list(b)] for a, b in data.family.duplicates]}
    text = "".join(" ".join(map(str, s)) + "\n" for s in sets)
    _emit(args, payload, text)
    return EXIT_OK


def cmd_complex(args) -> int:
    cfg = _source(args)
    deadline = Deadline(args.time_limit)
    data = _prepare(args, cfg, _target(args, cfg), deadline)
    cx = build_complex(data.projection, data.family, data.labels, deadline=deadline)
    _emit(args, mio.complex_to_dict(cx), mio.format_complex(cx))
    return EXIT_OK


def cmd_bounds(args) -> int:
    cfg = _source(args)
    deadline = Deadline(args.time_limit)
    target = _target(args, cfg)
    data = _prepare(args, cfg, target, deadline)
    gens = _gens(args, cfg.n)
    rep = bound_report(data.source, data.target, gens, time_limit=args.time_limit, data=data)
    _emit(args, mio.report_to_dict(rep), mio.report_to_text(rep))
    return EXIT_OK if rep.certified else EXIT_BUDGET


def cmd_verify_cover(args) -> int:
    cfg = _source(args)
    deadline = Deadline(args.time_limit)
    data = _prepare(args, cfg, _target(args, cfg), deadline)
    cx = build_complex(data.projection, data.family, data.labels, deadline=deadline)
    f = Grading.from_configuration(data.target)
    payload = {}
    lines = []
    for name, polys in _gens(args, cfg.n).items():
        rep = verify_cover_conditions(polys, f, cx, data)
        payload[name] = mio.cover_to_dict(rep, data.labels)
        lines.append(f"{name}: {'pass' if rep.ok else 'FAIL'}; uncovered: "
                     + (" ".join(data.labels[v] for v in sorted(rep.uncovered)) or "none"))
    _emit(args, payload, "\n".join(lines) + "\n")
    return EXIT_OK


def seed_cube(directory: str) -> list[Path]:
    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    files = {
        "cube.graph": mio.format_graph(cube.graph()),
        "B.config": mio.format_configuration(cube.b_configuration()),
        "circuits.polys": mio.format_polynomials(cube.polynomials(cube.CIRCUITS)),
        "circuits10.polys": mio.format_polynomials(cube.circuit_generators()),
        "radical7.polys": mio.format_polynomials(cube.radical_generators()),
    }
    out = []
    for name, body in files.items():
        p = d / name
        p.write_text(body)
        out.append(p)
    return out


HANDLERS = {
    "snf": cmd_snf, "saturate": cmd_saturate, "grading-check": cmd_grading_check,
    "meet": cmd_meet_join, "join": cmd_meet_join, "finest": cmd_finest, "positive": cmd_positive,
    "circuits": cmd_circuits, "nonfaces": cmd_nonfaces, "complex": cmd_complex,
    "bounds": cmd_bounds, "verify-cover": cmd_verify_cover,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="multigrade", description=__doc__.splitlines()[0])
    p.add_argument("--seed-example", choices=["cube"], help="write the cube example input files and exit")
    p.add_argument("--out", default=".", help="directory for --seed-example (default: .)")
    sub = p.add_subparsers(dest="command")
    for name in COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("--format", choices=["json", "text"], default="text")
        s.add_argument("--time-limit", type=float, default=None, metavar="SECONDS")
        s.add_argument("--budget", type=int, default=None, metavar="N")
        s.add_argument("--matrix")
        s.add_argument("--graph")
        s.add_argument("--config")
        s.add_argument("--grading", action="append")
        s.add_argument("--polys")
        s.add_argument("--spec", help="'identity', 'zero' or a configuration file for F")
        s.add_argument("--gens", action="append", help="polynomial file; repeatable")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed_example:
        for path in seed_cube(args.out):
            print(path)
        return EXIT_OK
    if not args.command:
        parser.print_help()
        return EXIT_INPUT
    try:
        return HANDLERS[args.command](args)
    except mio.ParseError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
