"""Text formats for matrices, lattices, gradings, configurations, graphs,
polynomials, complexes and reports.

Matrix block::

    rows cols
    a11 a12 ...
    ...

User-facing indices are 1-based everywhere.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Sequence

from .complexes import BoundReport, CoverReport, SimplicialComplex
from .configurations import Graph
from .grading import Grading, Polynomial
from .linalg import IntMatrix, Lattice, VectorConfiguration


class ParseError(ValueError):
    pass


def _lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def _ints(line: str, what: str) -> list[int]:
    try:
        return [int(x) for x in line.split()]
    except ValueError as exc:
        raise ParseError(f"{what}: expected integers, got {line!r}") from exc


# -- matrices ---------------------------------------------------------------

def format_matrix(rows: Sequence[Sequence[int]], ncols: int | None = None) -> str:
    nc = len(rows[0]) if rows else (ncols or 0)
    out = [f"{len(rows)} {nc}"]
    out += [" ".join(str(x) for x in r) for r in rows]
    return "\n".join(out) + "\n"


def _parse_matrix_lines(lines: list[str]) -> tuple[IntMatrix, int, list[str]]:
    if not lines:
        raise ParseError("missing matrix header 'rows cols'")
    header = _ints(lines[0], "matrix header")
    if len(header) != 2 or min(header) < 0:
        raise ParseError(f"matrix header must be 'rows cols', got {lines[0]!r}")
    r, c = header
    if len(lines) < 1 + r:
        raise ParseError(f"matrix declares {r} rows but only {len(lines) - 1} follow")
    rows = []
    for ln in lines[1:1 + r]:
        row = _ints(ln, "matrix row")
        if len(row) != c:
            raise ParseError(f"matrix row {ln!r} has {len(row)} entries, expected {c}")
        rows.append(row)
    return rows, c, lines[1 + r:]


def parse_matrix(text: str) -> tuple[IntMatrix, int]:
    rows, c, rest = _parse_matrix_lines(_lines(text))
    if rest:
        raise ParseError(f"trailing content after matrix: {rest[0]!r}")
    return rows, c


# -- lattices and gradings ----------------------------------------------------

def format_lattice(lat: Lattice) -> str:
    return format_matrix(lat.matrix(), lat.ambient_rank)


def parse_lattice(text: str) -> Lattice:
    rows, c = parse_matrix(text)
    return Lattice.from_generators(rows, c)


def format_grading(g: Grading) -> str:
    return f"{g.n}\n" + format_lattice(g.relation_lattice)


def parse_grading(text: str) -> Grading:
    lines = _lines(text)
    if not lines:
        raise ParseError("empty grading file")
    n = _ints(lines[0], "grading size")
    if len(n) != 1:
        raise ParseError("first line of a grading must be the number of variables")
    rows, c, rest = _parse_matrix_lines(lines[1:])
    if rest:
        raise ParseError(f"trailing content after grading: {rest[0]!r}")
    if c != n[0]:
        raise ParseError(f"lattice basis has {c} columns but the grading has n = {n[0]}")
    return Grading(Lattice.from_generators(rows, c))


# -- configurations -----------------------------------------------------------

def format_configuration(cfg: VectorConfiguration) -> str:
    head = ""
    if cfg.labels is not None:
        head = "labels " + " ".join(cfg.labels) + "\n"
    return head + format_matrix(cfg.matrix(), cfg.n)


def parse_configuration(text: str) -> VectorConfiguration:
    """Matrix whose columns are the vectors a_i, optionally preceded by 'labels ...'."""
    lines = _lines(text)
    labels = None
    if lines and lines[0].startswith("labels"):
        labels = lines[0].split()[1:]
        lines = lines[1:]
    rows, c, rest = _parse_matrix_lines(lines)
    if rest:
        raise ParseError(f"trailing content after configuration: {rest[0]!r}")
    if labels is not None and len(labels) != c:
        raise ParseError(f"{len(labels)} labels for {c} columns")
    try:
        return VectorConfiguration.from_matrix(rows, c, labels)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


# -- graphs -------------------------------------------------------------------

def format_graph(g: Graph) -> str:
    return "\n".join([f"vertices {g.vertices}"] + [f"{i} {j}" for i, j in g.edges]) + "\n"


def parse_graph(text: str) -> Graph:
    lines = _lines(text)
    if not lines or not lines[0].startswith("vertices"):
        raise ParseError("graph file must start with 'vertices k'")
    k = _ints(lines[0][len("vertices"):], "vertex count")
    if len(k) != 1:
        raise ParseError("graph file must start with 'vertices k'")
    edges = []
    for ln in lines[1:]:
        e = _ints(ln, "edge")
        if len(e) != 2:
            raise ParseError(f"edge line must be 'i j', got {ln!r}")
        edges.append(tuple(e))
    try:
        return Graph(k[0], tuple(edges))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


# -- polynomials --------------------------------------------------------------

def format_polynomial(p: Polynomial) -> str:
    return "\n".join(f"{c} " + " ".join(str(e) for e in exp) for exp, c in p.terms) + "\n"


def format_polynomials(polys: Sequence[Polynomial]) -> str:
    return "\n".join(format_polynomial(p) for p in polys)


def parse_polynomials(text: str, n: int | None = None) -> list[Polynomial]:
    """Blank-line separated blocks of 'coefficient e_1 ... e_n' term lines."""
    blocks: list[list[str]] = [[]]
    for raw in text.splitlines():
        ln = raw.strip()
        if ln.startswith("#"):
            continue
        if not ln:
            if blocks[-1]:
                blocks.append([])
            continue
        blocks[-1].append(ln)
    polys = []
    for block in blocks:
        if not block:
            continue
        terms = []
        for ln in block:
            parts = ln.split()
            try:
                coeff = Fraction(parts[0])
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"bad coefficient in {ln!r}") from exc
            exp = _ints(" ".join(parts[1:]), "exponent vector")
            if n is None:
                n = len(exp)
            if len(exp) != n:
                raise ParseError(f"term {ln!r} has {len(exp)} exponents, expected {n}")
            if any(e < 0 for e in exp):
                raise ParseError(f"negative exponent in {ln!r}")
            terms.append((exp, coeff))
        p = Polynomial.from_terms(terms, n)
        if not p:
            raise ParseError("a polynomial block sums to zero")
        polys.append(p)
    return polys


# -- complexes ----------------------------------------------------------------

def format_complex(c: SimplicialComplex) -> str:
    out = ["labels " + " ".join(c.labels),
           "vertices " + " ".join(str(v + 1) for v in sorted(c.vertices))]
    out += ["facet " + " ".join(str(v + 1) for v in sorted(f)) for f in c.facets]
    return "\n".join(out) + "\n"


def parse_complex(text: str) -> SimplicialComplex:
    lines = _lines(text)
    if len(lines) < 2 or not lines[0].startswith("labels") or not lines[1].startswith("vertices"):
        raise ParseError("complex must start with 'labels ...' and 'vertices ...' lines")
    labels = lines[0].split()[1:]
    verts = [v - 1 for v in _ints(lines[1][len("vertices"):], "vertices")]
    facets = []
    for ln in lines[2:]:
        if not ln.startswith("facet"):
            raise ParseError(f"unexpected line {ln!r}")
        facets.append(frozenset(v - 1 for v in _ints(ln[len("facet"):], "facet")))
    try:
        return SimplicialComplex(tuple(labels), frozenset(verts), tuple(facets))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def complex_to_dict(c: SimplicialComplex) -> dict[str, Any]:
    return {
        "vertices": [c.labels[v] for v in sorted(c.vertices)],
        "facets": [c.label_of(f) for f in c.facets],
        "dimension": c.dim,
    }


# -- reports ------------------------------------------------------------------

def cover_to_dict(rep: CoverReport, labels: Sequence[str]) -> dict[str, Any]:
    return {
        "spanning": rep.spanning,
        "ok": rep.ok,
        "uncovered": [labels[v] for v in sorted(rep.uncovered)],
        "polynomials": [
            {
                "homogeneous": v.homogeneous,
                "components": v.components,
                "vertices": [labels[i] for i in sorted(v.vertices)],
                "simplex": v.simplex,
            }
            for v in rep.verdicts
        ],
    }


def report_to_dict(rep: BoundReport) -> dict[str, Any]:
    labels = rep.labels
    return {
        "vertices": list(labels),
        "facets": [rep.complex_fg.label_of(f) for f in rep.complex_fg.facets],
        "facets_GG": [rep.complex_gg.label_of(f) for f in rep.complex_gg.facets],
        "gamma": rep.gamma,
        "delta": rep.delta,
        "height": rep.height,
        "floors": {"monomials": rep.monomial_floor, "components": rep.component_floor},
        "upper_bounds": [
            {
                "name": s.name,
                "size": s.size,
                "all_F_homogeneous": s.all_homogeneous,
                "certifies": s.certifies,
                "total_monomials": s.total_monomials,
                "total_components": s.total_components,
                "monomial_floor_ok": s.total_monomials >= rep.monomial_floor,
                "component_floor_ok": s.total_components >= rep.component_floor,
                "cover": cover_to_dict(s.cover, labels),
            }
            for s in rep.generator_sets
        ],
        "bracket": {"lower": rep.lower_bound, "upper": rep.upper_bound},
        "witnesses": {
            "coloring": {labels[v]: c for v, c in sorted(rep.gamma_coloring.items())},
            "matching": [[labels[v] for v in sorted(f)] for f in rep.delta_matching],
        },
        "certified": rep.certified,
        "conclusion": rep.conclusion,
    }


def report_to_text(rep: BoundReport) -> str:
    d = report_to_dict(rep)
    out = [
        f"vertices: {len(d['vertices'])}",
        f"facets of D_G^G: {len(d['facets_GG'])}",
        f"facets of D_F^G: {len(d['facets'])}",
    ]
    out += ["  " + " ".join(f) for f in d["facets"]]
    out += [
        f"height: {rep.height}",
        f"gamma: {rep.gamma}",
        f"delta: {rep.delta}",
        "matching: " + " | ".join(" ".join(f) for f in d["witnesses"]["matching"]),
        f"monomial floor: {rep.monomial_floor}",
        f"component floor: {rep.component_floor}",
    ]
    for s in d["upper_bounds"]:
        out.append(
            f"generators {s['name']}: size {s['size']}, F-homogeneous {s['all_F_homogeneous']}, "
            f"monomials {s['total_monomials']}, components {s['total_components']}, "
            f"cover conditions {'pass' if s['cover']['ok'] else 'FAIL'}"
        )
    up = rep.upper_bound
    out.append(f"chain: {rep.height} <= {max(rep.gamma, rep.delta)} <= ara_F"
               + (f" <= {up}" if up is not None else ""))
    out.append(f"conclusion: {rep.conclusion}")
    if not rep.certified:
        out.append("bound not certified (time limit)")
    return "\n".join(out) + "\n"


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=False, default=str) + "\n"
