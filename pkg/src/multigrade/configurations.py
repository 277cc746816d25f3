"""Vector configurations from graphs, their circuits, and monomial cones."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from ._budget import BudgetExceeded
from .cones import NonfaceFamily, RationalCone, cone_membership
from .linalg import Lattice, Vector, VectorConfiguration, kernel_basis, primitive, rank

__all__ = [
    "Graph", "Circuit", "VectorConfiguration", "graph_configuration", "circuits",
    "graph_circuits", "height", "monomial_degree", "cone_of_monomial",
]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..vertices; edges are sorted pairs (i, j), i < j."""

    vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for i, j in self.edges:
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (1 <= i < j <= self.vertices):
                raise ValueError(f"edge ({i}, {j}) must satisfy 1 <= i < j <= {self.vertices}")
            if (i, j) in seen:
                raise ValueError(f"repeated edge ({i}, {j})")
            seen.add((i, j))

    @classmethod
    def from_edges(cls, edges, vertices: int | None = None) -> Graph:
        es = sorted({tuple(sorted(e)) for e in edges})
        if vertices is None:
            vertices = max((j for _, j in es), default=0)
        return cls(vertices, tuple(es))

    def neighbours(self, v: int) -> list[int]:
        out = [j for i, j in self.edges if i == v] + [i for i, j in self.edges if j == v]
        return sorted(out)

    def components(self) -> int:
        parent = list(range(self.vertices + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, j in self.edges:
            parent[find(i)] = find(j)
        return len({find(v) for v in range(1, self.vertices + 1)})

    def is_bipartite(self) -> bool:
        colour: dict[int, int] = {}
        for s in range(1, self.vertices + 1):
            if s in colour:
                continue
            colour[s] = 0
            stack = [s]
            while stack:
                v = stack.pop()
                for w in self.neighbours(v):
                    if w not in colour:
                        colour[w] = 1 - colour[v]
                        stack.append(w)
                    elif colour[w] == colour[v]:
                        return False
        return True


def graph_configuration(g: Graph) -> VectorConfiguration:
    """One column e_i + e_j per edge, in lexicographic edge order, labelled "ij"."""
    if not g.edges:
        raise ValueError("graph has no edges")
    cols = []
    for i, j in g.edges:
        col = [0] * g.vertices
        col[i - 1] = col[j - 1] = 1
        cols.append(tuple(col))
    return VectorConfiguration(g.vertices, tuple(cols), tuple(f"{i}{j}" for i, j in g.edges))


@dataclass(frozen=True)
class Circuit:
    """Primitive kernel vector with minimal support; first nonzero entry positive."""

    vector: Vector

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, x in enumerate(self.vector) if x)

    @property
    def plus(self) -> Vector:
        return tuple(max(x, 0) for x in self.vector)

    @property
    def minus(self) -> Vector:
        return tuple(max(-x, 0) for x in self.vector)

    def binomial(self, labels: Sequence[str] | None = None) -> str:
        names = [f"x{l}" for l in labels] if labels else [f"x{i + 1}" for i in range(len(self.vector))]

        def mono(e):
            return "*".join(names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(e) if k)

        return f"{mono(self.plus)} - {mono(self.minus)}"


def _canonical_sign(v: Sequence[int]) -> Vector:
    v = primitive(v)
    first = next(x for x in v if x)
    return v if first > 0 else tuple(-x for x in v)


def _sort_key(c: Circuit):
    return (len(c.support), c.support, c.vector)


def circuits(config: VectorConfiguration, budget: int = 20) -> list[Circuit]:
    """All circuits, by enumeration of column subsets of corank one."""
    n = config.n
    if n > budget:
        raise BudgetExceeded(f"{n} columns exceed the circuit enumeration budget of {budget}")
    cols = config.columns
    r = rank([list(c) for c in cols]) if cols else 0
    found: set[Vector] = set()
    if config.ambient_dim == 0:
        return [Circuit(tuple(int(i == j) for j in range(n))) for i in range(n)]
    for size in range(1, r + 2):
        for S in itertools.combinations(range(n), size):
            sub = [[cols[j][i] for j in S] for i in range(config.ambient_dim)]
            ker = kernel_basis(sub, size)
            if ker.rank != 1:
                continue
            v = ker.basis[0]
            if not all(v):
                continue
            full = [0] * n
            for j, x in zip(S, v):
                full[j] = x
            found.add(_canonical_sign(full))
    return sorted((Circuit(v) for v in found), key=_sort_key)


def _simple_cycles(g: Graph) -> list[tuple[int, ...]]:
    """Each simple cycle once: start at its smallest vertex, second vertex < last."""
    adj = {v: g.neighbours(v) for v in range(1, g.vertices + 1)}
    out = []
    for start in range(1, g.vertices + 1):
        path = [start]
        on_path = {start}

        def extend():
            v = path[-1]
            for w in adj[v]:
                if w == start and len(path) >= 3 and path[1] < path[-1]:
                    out.append(tuple(path))
                elif w > start and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    extend()
                    path.pop()
                    on_path.discard(w)

        extend()
    return out


def graph_circuits(g: Graph) -> list[Circuit]:
    """Circuits of a bipartite graph: even cycles with alternating +1/-1 edge exponents."""
    if not g.is_bipartite():
        raise ValueError("graph is not bipartite; use circuits(graph_configuration(g))")
    index = {e: k for k, e in enumerate(g.edges)}
    found = set()
    for cyc in _simple_cycles(g):
        v = [0] * len(g.edges)
        for k in range(len(cyc)):
            a, b = cyc[k], cyc[(k + 1) % len(cyc)]
            v[index[(min(a, b), max(a, b))]] = 1 if k % 2 == 0 else -1
        found.add(_canonical_sign(v))
    return sorted((Circuit(v) for v in found), key=_sort_key)


def height(lat: Lattice) -> int:
    """Height of the lattice ideal I_L, which equals rank(L)."""
    return lat.rank


def monomial_degree(u: Sequence[int], config: VectorConfiguration) -> Vector:
    """A . u"""
    return config.degree(u)


def _in_subcone(col: Vector, E: Sequence[int], rays: Sequence[Vector], ray_of: dict[Vector, int]) -> bool:
    p = primitive(col)
    if p in ray_of:
        # an extreme vector lies in pos(other rays) only if it is one of them
        return ray_of[p] in E
    return cone_membership(col, RationalCone(len(col), tuple(rays[j] for j in E)))


def cone_of_monomial(u: Sequence[int], config: VectorConfiguration, family: NonfaceFamily,
                     method: str = "fast") -> Optional[int]:
    """Index i of the minimal non-face with cone(x^u) = sigma(E_i), or None.

    ``method="fast"``: the i with every support column of u in sigma(E_i) and,
    for each j in E_i, some support column outside sigma(rays - {j}).  Since
    sigma(E) grows with E, that says every subcone containing the support uses
    all of E_i, which is exactly cone(x^u) = sigma(E_i).  ``method="definition"``
    intersects every containing subcone sigma(E) directly; limited to 16
    extreme vectors.
    """
    if len(u) != config.n:
        raise ValueError("exponent vector does not match the configuration")
    rays = family.rays
    ray_of = {r: k for k, r in enumerate(rays)}
    support_cols = [config.columns[i] for i, e in enumerate(u) if e]
    if method == "fast":
        everything = range(len(rays))
        for i, E in enumerate(family.minimal_nonfaces):
            if not all(_in_subcone(c, E, rays, ray_of) for c in support_cols):
                continue
            if all(not all(_in_subcone(c, [k for k in everything if k != j], rays, ray_of) for c in support_cols)
                   for j in E):
                return i
        return None
    if method != "definition":
        raise ValueError(f"unknown method {method!r}")
    t = len(rays)
    if t > 16:
        raise BudgetExceeded(f"{t} extreme vectors exceed the definitional budget of 16")
    containing = []
    for mask in range(1 << t):
        E = [j for j in range(t) if mask >> j & 1]
        if all(_in_subcone(c, E, rays, ray_of) for c in support_cols):
            containing.append(mask)
    for i, E in enumerate(family.minimal_nonfaces):
        emask = sum(1 << j for j in E)
        if emask in containing and all(emask & m == emask for m in containing):
            return i
    return None
