"""Simplicial complexes of minimal non-faces and the lower bounds built on them.

Vertices of every complex here are the minimal non-faces E_1..E_f of the
cone of a positive grading G.  A set T of vertices is a face of D_F^G when
the relative interiors of the projected subcones pi(sigma(E_i)), E_i in T,
have a common point.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

from ._budget import Deadline
from .cones import (NonfaceFamily, Projection, RationalCone, RayData, configuration_rays,
                    identity_projection, minimal_nonfaces, project, relint_intersection_nonempty)
from .configurations import Graph, cone_of_monomial, height
from .grading import Grading, Polynomial, homogeneous_components
from .linalg import VectorConfiguration

Face = frozenset[int]


def _maximal(sets: Iterable[Face]) -> tuple[Face, ...]:
    uniq = sorted(set(sets), key=lambda s: (-len(s), sorted(s)))
    out: list[Face] = []
    for s in uniq:
        if not any(s <= t for t in out):
            out.append(s)
    return tuple(sorted(out, key=lambda s: (sorted(s), len(s))))


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex on a subset of the labelled vertices, stored by its facets.

    ``labels`` names every potential vertex (index i is E_{i+1}); ``vertices``
    is the actual vertex set.  A set is a face iff it lies in some facet.
    """

    labels: tuple[str, ...]
    vertices: frozenset[int]
    facets: tuple[Face, ...]

    def __post_init__(self):
        if any(not f for f in self.facets):
            raise ValueError("the empty set is not stored as a facet")
        covered = frozenset().union(*self.facets) if self.facets else frozenset()
        if covered != self.vertices:
            raise ValueError("facets must cover exactly the vertex set")
        for a, b in itertools.permutations(self.facets, 2):
            if a <= b:
                raise ValueError("a facet is contained in another facet")

    @classmethod
    def from_faces(cls, labels: Sequence[str], faces: Iterable[Iterable[int]],
                   vertices: Iterable[int] | None = None) -> SimplicialComplex:
        fs = [frozenset(f) for f in faces]
        verts = frozenset(vertices) if vertices is not None else frozenset().union(*fs) if fs else frozenset()
        fs += [frozenset([v]) for v in verts]
        return cls(tuple(labels), verts, _maximal(f for f in fs if f))

    def is_face(self, t: Iterable[int]) -> bool:
        t = frozenset(t)
        if not t:
            return True
        return any(t <= f for f in self.facets)

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    @property
    def omega(self) -> tuple[int, ...]:
        return tuple(range(self.dim + 1))

    def faces_of_dim(self, d: int) -> list[Face]:
        out = set()
        for f in self.facets:
            for c in itertools.combinations(sorted(f), d + 1):
                out.add(frozenset(c))
        return sorted(out, key=sorted)

    def induced(self, verts: Iterable[int]) -> SimplicialComplex:
        v = frozenset(verts)
        if not v <= self.vertices:
            raise ValueError("induced vertex set is not inside the complex")
        return SimplicialComplex(self.labels, v, _maximal(f & v for f in self.facets if f & v))

    def label_of(self, face: Iterable[int]) -> list[str]:
        return [self.labels[i] for i in sorted(face)]


def union(complexes: Sequence[SimplicialComplex]) -> SimplicialComplex:
    if not complexes:
        raise ValueError("nothing to unite")
    labels = complexes[0].labels
    facets = [f for c in complexes for f in c.facets]
    verts = frozenset().union(*(c.vertices for c in complexes))
    return SimplicialComplex(labels, verts, _maximal(facets))


def nonface_labels(family: NonfaceFamily, rays: RayData, config: VectorConfiguration) -> tuple[str, ...]:
    """E-labels such as ``{14,23}`` built from the column labels of the rays."""
    out = []
    for E in family.minimal_nonfaces:
        names = [config.label(rays.columns[j]) for j in E]
        out.append("{" + ",".join(names) + "}")
    return tuple(out)


class FacePredicate:
    """Memoised LP test 'the projected relative interiors of T meet'."""

    def __init__(self, proj: Projection, family: NonfaceFamily):
        self.family = family
        images = []
        for E in family.minimal_nonfaces:
            gens = [proj.image(family.rays[j]) for j in E]
            images.append(RationalCone.from_vectors(gens, proj.target.ambient_dim))
        self.images = images
        self._cache: dict[Face, bool] = {}
        self.calls = 0

    def __call__(self, t: Iterable[int]) -> bool:
        t = frozenset(t)
        if len(t) <= 1:
            return True
        hit = self._cache.get(t)
        if hit is None:
            self.calls += 1
            hit = relint_intersection_nonempty([self.images[i] for i in sorted(t)]) is not None
            self._cache[t] = hit
        return hit


def _sweep(pred: FacePredicate, f: int, deadline: Deadline | None) -> list[Face]:
    level = [frozenset([v]) for v in range(f)]
    faces = set(level)
    maximal = []
    while level:
        nxt = set()
        for t in level:
            for v in range(max(t) + 1, f):
                cand = t | {v}
                if all(cand - {w} in faces for w in cand) and cand not in nxt:
                    if deadline is not None:
                        deadline.check("complex construction")
                    if pred(cand):
                        nxt.add(cand)
        faces |= nxt
        for t in level:
            if not any(t < s for s in nxt):
                maximal.append(t)
        level = sorted(nxt, key=sorted)
    return maximal


def _maximal_cliques(adj: dict[int, set[int]]) -> list[Face]:
    out: list[Face] = []

    def bk(r: set[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            out.append(frozenset(r))
            return
        pivot = max(p | x, key=lambda u: len(adj[u] & p))
        for v in sorted(p - adj[pivot]):
            bk(r | {v}, p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    bk(set(), set(adj), set())
    return out


def _descend(pred: FacePredicate, f: int, deadline: Deadline | None) -> list[Face]:
    """Exact facets, top down from the maximal cliques of the 1-skeleton.

    A facet F lies in some maximal clique C, and every set strictly between
    F and C is a non-face, so removing one vertex at a time from non-faces
    reaches F.
    """
    adj: dict[int, set[int]] = {v: set() for v in range(f)}
    for a, b in itertools.combinations(range(f), 2):
        if deadline is not None:
            deadline.check("complex construction")
        if pred((a, b)):
            adj[a].add(b)
            adj[b].add(a)
    level = {c for c in _maximal_cliques(adj) if c}
    facets: list[Face] = []
    while level:
        size = max(len(t) for t in level)
        top = sorted((t for t in level if len(t) == size), key=sorted)
        level -= set(top)
        for t in top:
            if any(t <= g for g in facets):
                continue
            if deadline is not None:
                deadline.check("complex construction")
            if pred(t):
                facets.append(t)
            else:
                level.update(t - {v} for v in t)
    return facets


def build_complex(proj: Projection, family: NonfaceFamily, labels: Sequence[str] | None = None,
                  method: str = "descend", deadline: Deadline | None = None) -> SimplicialComplex:
    """D_F^G for the projection sigma_G -> sigma_F and the minimal non-faces of sigma_G.

    Both methods are exact.  ``method="descend"`` (the default) starts from
    the maximal cliques of the 1-skeleton and only tests sets near the
    facets; ``method="sweep"`` enumerates every face bottom up, which is
    exponential in the facet size and is kept as a cross-check.
    """
    f = len(family)
    if family.rays and len(family.rays[0]) != proj.source.ambient_dim:
        raise ValueError("projection source does not match the cone of the non-faces")
    if labels is None:
        labels = tuple(f"E{i + 1}" for i in range(f))
    pred = FacePredicate(proj, family)
    if method == "descend":
        facets = _descend(pred, f, deadline)
    elif method == "sweep":
        facets = _sweep(pred, f, deadline)
    else:
        raise ValueError(f"unknown method {method!r}")
    # certify maximality: every one-vertex extension of a facet is a non-face
    for t in facets:
        for w in range(f):
            if w not in t and all(pred((w, v)) for v in t) and pred(t | {w}):
                raise AssertionError(f"facet {sorted(t)} extends by vertex {w}")
    return SimplicialComplex(tuple(labels), frozenset(range(f)), _maximal(facets))


@dataclass
class ConeData:
    """Everything derived from a configuration A of G and a configuration B of F <= G."""

    source: VectorConfiguration
    target: VectorConfiguration
    rays: RayData
    family: NonfaceFamily
    projection: Projection
    labels: tuple[str, ...]

    @property
    def grading_g(self) -> Grading:
        return Grading.from_configuration(self.source)

    @property
    def grading_f(self) -> Grading:
        return Grading.from_configuration(self.target)


def prepare(source: VectorConfiguration, target: VectorConfiguration | None = None,
            deadline: Deadline | None = None) -> ConeData:
    """Extreme rays, minimal non-faces and the projection for a pair (A, B)."""
    rays = configuration_rays(source)
    family = minimal_nonfaces(rays.rays, deadline=deadline)
    proj = identity_projection(source) if target is None else project(source, target)
    return ConeData(source, proj.target, rays, family, proj, nonface_labels(family, rays, source))


def polynomial_subcomplex(poly: Polynomial, complex_: SimplicialComplex, data: ConeData) -> SimplicialComplex:
    """Subcomplex induced on the E_i equal to cone(N) for some monomial N of ``poly``."""
    if not poly.terms:
        raise ValueError("the zero polynomial is not allowed here")
    verts = set()
    for exp in poly.monomials:
        i = cone_of_monomial(exp, data.source, data.family)
        if i is not None:
            verts.add(i)
    return complex_.induced(verts)


def is_subcomplex(sub: SimplicialComplex, complex_: SimplicialComplex) -> bool:
    return sub.vertices <= complex_.vertices and all(complex_.is_face(f) for f in sub.facets)


def is_spanning(sub: SimplicialComplex, complex_: SimplicialComplex) -> bool:
    if not is_subcomplex(sub, complex_):
        raise ValueError("not a subcomplex")
    return sub.vertices == complex_.vertices


def is_simplex(complex_: SimplicialComplex) -> bool:
    return not complex_.vertices or complex_.is_face(complex_.vertices)


@dataclass
class PolynomialVerdict:
    polynomial: Polynomial
    homogeneous: bool
    components: int
    vertices: frozenset[int]
    simplex: bool

    @property
    def ok(self) -> bool:
        return self.simplex or not self.homogeneous


@dataclass
class CoverReport:
    """Necessary conditions for generating rad(I_L) up to radical; can refute, never certify."""

    verdicts: list[PolynomialVerdict]
    uncovered: frozenset[int]
    spanning: bool

    @property
    def ok(self) -> bool:
        return self.spanning and all(v.ok for v in self.verdicts)


def verify_cover_conditions(polys: Sequence[Polynomial], f: Grading, complex_: SimplicialComplex,
                            data: ConeData) -> CoverReport:
    if f.n != data.source.n:
        raise ValueError("grading and configuration have different numbers of variables")
    verdicts = []
    subs = []
    for p in polys:
        if p.n != f.n:
            raise ValueError("polynomial ring does not match the grading")
        sub = polynomial_subcomplex(p, complex_, data)
        comps = len(homogeneous_components(p, f))
        verdicts.append(PolynomialVerdict(p, comps == 1, comps, sub.vertices, is_simplex(sub)))
        subs.append(sub)
    covered = frozenset().union(*(s.vertices for s in subs)) if subs else frozenset()
    uncovered = complex_.vertices - covered
    return CoverReport(verdicts, uncovered, not uncovered)


# ---------------------------------------------------------------------------
# Graph invariants
# ---------------------------------------------------------------------------

def skeleton_complement(complex_: SimplicialComplex) -> tuple[Graph, tuple[int, ...]]:
    """Complement of the {0,1}-skeleton.

    Returns the graph on 1..f together with the complex vertex behind each
    graph vertex.
    """
    order = tuple(sorted(complex_.vertices))
    edges = []
    for a, b in itertools.combinations(range(len(order)), 2):
        if not complex_.is_face({order[a], order[b]}):
            edges.append((a + 1, b + 1))
    return Graph(len(order), tuple(edges)), order


@dataclass
class ColoringResult:
    number: int
    coloring: dict[int, int]
    certified: bool = True
    lower_bound: int = 0

    def verify(self, g: Graph) -> bool:
        if set(self.coloring) != set(range(1, g.vertices + 1)):
            return False
        if len(set(self.coloring.values())) > self.number:
            return False
        return all(self.coloring[i] != self.coloring[j] for i, j in g.edges)


def _greedy_clique(adj: dict[int, set[int]]) -> list[int]:
    best: list[int] = []
    for v in sorted(adj, key=lambda x: -len(adj[x])):
        clique = [v]
        for w in sorted(adj[v], key=lambda x: -len(adj[x])):
            if all(w in adj[u] for u in clique):
                clique.append(w)
        if len(clique) > len(best):
            best = clique
    return best


def chromatic_number(g: Graph, time_limit: float | None = None) -> ColoringResult:
    """Exact chromatic number by DSATUR branch and bound."""
    verts = list(range(1, g.vertices + 1))
    if not verts:
        return ColoringResult(0, {}, True, 0)
    adj: dict[int, set[int]] = {v: set() for v in verts}
    for i, j in g.edges:
        adj[i].add(j)
        adj[j].add(i)
    clique = _greedy_clique(adj)
    lower = max(1, len(clique))

    # DSATUR greedy for the initial upper bound
    col: dict[int, int] = {}
    for _ in verts:
        v = max((u for u in verts if u not in col),
                key=lambda u: (len({col[w] for w in adj[u] if w in col}), len(adj[u]), -u))
        used = {col[w] for w in adj[v] if w in col}
        col[v] = next(c for c in itertools.count() if c not in used)
    best = [max(col.values()) + 1, dict(col)]
    deadline = Deadline(time_limit)
    timed_out = False

    assign: dict[int, int] = {}
    # fix the clique's colours to break symmetry
    for k, v in enumerate(clique):
        assign[v] = k

    def search(k_used: int) -> bool:
        nonlocal timed_out
        if best[0] == lower:
            return True
        if deadline.expired():
            timed_out = True
            return True
        if len(assign) == len(verts):
            if k_used < best[0]:
                best[0], best[1] = k_used, dict(assign)
            return best[0] == lower
        v = max((u for u in verts if u not in assign),
                key=lambda u: (len({assign[w] for w in adj[u] if w in assign}), len(adj[u]), -u))
        used = {assign[w] for w in adj[v] if w in assign}
        for c in range(k_used + 1):
            if c in used:
                continue
            new_k = k_used + (c == k_used)
            if new_k >= best[0]:
                continue
            assign[v] = c
            stop = search(new_k)
            del assign[v]
            if stop:
                return True
        return False

    search(len(clique))
    number, colouring = best
    return ColoringResult(number, {v: c + 1 for v, c in colouring.items()}, not timed_out, lower)


@dataclass
class DeltaResult:
    value: int
    matching: list[Face]
    certified: bool = True


def delta_omega(complex_: SimplicialComplex, time_limit: float | None = None) -> DeltaResult:
    """Smallest number of faces whose union is all vertices, with a disjoint witness.

    Faces are subsets of facets, so an optimal cover by facets is trimmed
    into pairwise disjoint faces of the same count: a maximal Omega-matching.
    """
    verts = complex_.vertices
    if not verts:
        return DeltaResult(0, [])
    facets = list(complex_.facets)
    biggest = max(len(f) for f in facets)
    containing = {v: [f for f in facets if v in f] for v in verts}
    best: list = [len(verts) + 1, None]
    deadline = Deadline(time_limit)
    timed_out = False

    def search(chosen: list[Face], uncovered: frozenset[int]) -> None:
        nonlocal timed_out
        if not uncovered:
            if len(chosen) < best[0]:
                best[0], best[1] = len(chosen), list(chosen)
            return
        if deadline.expired():
            timed_out = True
            return
        if len(chosen) + -(-len(uncovered) // biggest) >= best[0]:
            return
        v = min(uncovered, key=lambda u: (len(containing[u]), u))
        for f in sorted(containing[v], key=lambda s: (-len(s & uncovered), sorted(s))):
            chosen.append(f)
            search(chosen, uncovered - f)
            chosen.pop()

    search([], frozenset(verts))
    if best[1] is None:
        # only reachable on timeout before any cover was found
        cover = [frozenset([v]) for v in sorted(verts)]
        best = [len(cover), cover]
    seen: set[int] = set()
    matching = []
    for f in best[1]:
        part = frozenset(f - seen)
        seen |= f
        if part:
            matching.append(part)
    return DeltaResult(len(matching), matching, not timed_out)


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

@dataclass
class GeneratorSetSummary:
    name: str
    size: int
    all_homogeneous: bool
    total_monomials: int
    total_components: int
    cover: CoverReport
    certifies: str

    @property
    def upper_bound(self) -> Optional[int]:
        """An upper bound for ara_F, valid only if the set generates rad(I) up to radical."""
        return self.size if self.all_homogeneous else None


@dataclass
class BoundReport:
    labels: tuple[str, ...]
    complex_gg: SimplicialComplex
    complex_fg: SimplicialComplex
    gamma: int
    gamma_coloring: dict[int, int]
    delta: int
    delta_matching: list[Face]
    height: int
    monomial_floor: int
    component_floor: int
    generator_sets: list[GeneratorSetSummary] = field(default_factory=list)
    certified: bool = True

    @property
    def lower_bound(self) -> int:
        return max(self.gamma, self.delta, self.height)

    @property
    def upper_bound(self) -> Optional[int]:
        ups = [s.upper_bound for s in self.generator_sets if s.upper_bound is not None and s.cover.ok]
        return min(ups) if ups else None

    @property
    def conclusion(self) -> str:
        lines = []
        combinatorial = max(self.gamma, self.delta)
        if self.height < combinatorial:
            lines.append(
                f"not an F-homogeneous set-theoretic complete intersection: "
                f"ht = {self.height} < {combinatorial} <= ara_F"
            )
        up = self.upper_bound
        if up is not None:
            if up == self.lower_bound:
                lines.append(f"F-homogeneous arithmetical rank pinned: ara_F = {up}")
            else:
                lines.append(f"{self.lower_bound} <= ara_F <= {up}")
        else:
            lines.append(f"ara_F >= {self.lower_bound}")
        return "; ".join(lines)


def _as_pair(x: Union[Grading, VectorConfiguration]) -> tuple[Grading, VectorConfiguration]:
    if isinstance(x, Grading):
        return x, x.configuration
    return Grading.from_configuration(x), x


def bound_report(g: Union[Grading, VectorConfiguration], f: Union[Grading, VectorConfiguration, None] = None,
                 generator_sets: dict[str, Sequence[Polynomial]] | None = None,
                 time_limit: float | None = None, data: ConeData | None = None) -> BoundReport:
    """gamma <= delta <= ara_ZB <= ara_F, plus height and the monomial/component floors."""
    grading_g, config_g = _as_pair(g)
    grading_f, config_f = _as_pair(f) if f is not None else (grading_g, config_g)
    if grading_f.n != grading_g.n:
        raise ValueError("gradings on different numbers of variables")
    deadline = Deadline(time_limit)
    if data is None:
        data = prepare(config_g, config_f, deadline=deadline)
    d_gg = build_complex(identity_projection(data.source), data.family, data.labels, deadline=deadline)
    d_fg = build_complex(data.projection, data.family, data.labels, deadline=deadline)
    comp, order = skeleton_complement(d_fg)
    col = chromatic_number(comp, time_limit)
    delta = delta_omega(d_fg, time_limit)
    report = BoundReport(
        labels=data.labels,
        complex_gg=d_gg,
        complex_fg=d_fg,
        gamma=col.number,
        gamma_coloring={order[v - 1]: c for v, c in col.coloring.items()},
        delta=delta.value,
        delta_matching=delta.matching,
        height=height(grading_g.relation_lattice),
        monomial_floor=len(d_gg.vertices),
        component_floor=delta.value,
        certified=col.certified and delta.certified,
    )
    if report.certified and report.gamma > report.delta:
        raise AssertionError("gamma exceeds delta")
    for name, polys in (generator_sets or {}).items():
        cover = verify_cover_conditions(polys, grading_f, d_fg, data)
        homog = all(v.homogeneous for v in cover.verdicts)
        zb_homog = all(len(homogeneous_components(p, data.grading_f)) == 1 for p in polys)
        report.generator_sets.append(GeneratorSetSummary(
            name=name,
            size=len(polys),
            all_homogeneous=homog,
            total_monomials=sum(len(p.terms) for p in polys),
            total_components=sum(v.components for v in cover.verdicts),
            cover=cover,
            certifies="ara_F" if homog else ("ara_ZB" if zb_homog else "none"),
        ))
    return report
