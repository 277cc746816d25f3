"""Exact rational polyhedral cones.

Every question here reduces to a single call of :func:`multigrade.lp.lp_feasible`.
Strict inequalities never reach the LP: because all sets involved are cones,
"positive" is encoded as ">= 1".
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from ._budget import Deadline
from .linalg import Vector, VectorConfiguration, lattice_contains, primitive
from .lp import LinearSystem, lp_feasible

IndexSet = tuple[int, ...]


def _as_integer_direction(v: Sequence[Fraction | int]) -> Vector:
    den = 1
    for x in v:
        den = den * Fraction(x).denominator // _gcd(den, Fraction(x).denominator)
    return primitive([int(Fraction(x) * den) for x in v])


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


@dataclass(frozen=True)
class RationalCone:
    """pos(generators) in Q^ambient_dim.

    Generators are stored as primitive integer vectors.  Zero generators are
    dropped: they change neither the cone nor its relative interior.
    """

    ambient_dim: int
    generators: tuple[Vector, ...] = ()

    @classmethod
    def from_vectors(cls, vectors: Iterable[Sequence[Fraction | int]], ambient_dim: int) -> RationalCone:
        gens = []
        for v in vectors:
            if len(v) != ambient_dim:
                raise ValueError(f"generator {tuple(v)} is not in dimension {ambient_dim}")
            if any(v):
                gens.append(_as_integer_direction(v))
        return cls(ambient_dim, tuple(gens))

    @classmethod
    def of_configuration(cls, config: VectorConfiguration) -> RationalCone:
        return cls.from_vectors(config.columns, config.ambient_dim)

    def subcone(self, indices: Iterable[int]) -> RationalCone:
        return RationalCone(self.ambient_dim, tuple(self.generators[i] for i in indices))


def _check_dim(v: Sequence, cone: RationalCone) -> None:
    if len(v) != cone.ambient_dim:
        raise ValueError(f"vector of length {len(v)} vs cone in dimension {cone.ambient_dim}")


def _combination_system(v: Sequence, gens: Sequence[Vector], lb: int, scaled: bool) -> LinearSystem:
    # unknowns: one coefficient per generator, then (if scaled) mu
    k = len(gens)
    m = len(v)
    nv = k + (1 if scaled else 0)
    eq = []
    for i in range(m):
        row = [g[i] for g in gens]
        if scaled:
            eq.append((row + [-v[i]], 0))
        else:
            eq.append((row, v[i]))
    return LinearSystem.build(nv, eq=eq, lower=[lb] * nv)


def cone_membership(v: Sequence[int | Fraction], cone: RationalCone) -> bool:
    """v = sum lambda_i g_i with lambda >= 0."""
    _check_dim(v, cone)
    if not cone.generators:
        return not any(v)
    return lp_feasible(_combination_system(v, cone.generators, 0, False)) is not None


def relint_membership(v: Sequence[int | Fraction], cone: RationalCone) -> bool:
    """mu * v = sum lambda_i g_i with every lambda_i >= 1 and mu >= 1."""
    _check_dim(v, cone)
    if not cone.generators:
        return not any(v)
    return lp_feasible(_combination_system(v, cone.generators, 1, True)) is not None


def is_strongly_convex(cone: RationalCone) -> tuple[bool, Vector]:
    """Return ``(True, c)`` with c . g >= 1 for every generator, or
    ``(False, w)`` with w a nonzero vector in C and in -C."""
    m = cone.ambient_dim
    if not cone.generators:
        return True, (0,) * m
    sol = lp_feasible(LinearSystem.build(m, ge=[(list(g), 1) for g in cone.generators]))
    if sol is not None:
        return True, _as_integer_direction(sol)
    k = len(cone.generators)
    eq = [([g[i] for g in cone.generators], 0) for i in range(m)]
    eq.append(([1] * k, 1))
    lam = lp_feasible(LinearSystem.build(k, eq=eq, lower=[0] * k))
    assert lam is not None, "Farkas alternative failed"
    i = next(i for i, x in enumerate(lam) if x > 0)
    return False, cone.generators[i]


def _parallel(a: Vector, b: Vector) -> bool:
    return primitive(a) == primitive(b)


def extreme_rays(cone: RationalCone) -> IndexSet:
    """Indices of generators spanning the 1-dimensional faces (first of each parallel class)."""
    ok, _ = is_strongly_convex(cone)
    if not ok:
        raise ValueError("cone is not strongly convex")
    gens = cone.generators
    out = []
    for i, g in enumerate(gens):
        if any(_parallel(g, gens[j]) for j in range(i)):
            continue
        others = [h for h in gens if not _parallel(h, g)]
        if not cone_membership(g, RationalCone(cone.ambient_dim, tuple(others))):
            out.append(i)
    return tuple(out)


@dataclass(frozen=True)
class FaceCertificate:
    """c . r_i == 0 on ``zero_set`` and c . r_j >= 1 on every other ray."""

    covector: tuple[Fraction, ...]
    zero_set: IndexSet

    def verify(self, rays: Sequence[Vector]) -> bool:
        for i, r in enumerate(rays):
            val = sum(c * x for c, x in zip(self.covector, r))
            if i in self.zero_set:
                if val != 0:
                    return False
            elif val < 1:
                return False
        return True


def is_face(subset: Iterable[int], rays: Sequence[Vector]) -> Optional[FaceCertificate]:
    """Certificate that pos(rays[i] : i in subset) is a face of pos(rays), or None.

    ``rays`` must be the extreme vectors of a strongly convex cone.  The empty
    set certifies the face {0} and the full set certifies the cone itself.
    """
    E = tuple(sorted(set(subset)))
    t = len(rays)
    for i in E:
        if not 0 <= i < t:
            raise IndexError(f"ray index {i} out of range")
    if not rays:
        return FaceCertificate((), E)
    m = len(rays[0])
    if len(E) == t:
        return FaceCertificate((Fraction(0),) * m, E)
    inside = set(E)
    eq = [(list(rays[i]), 0) for i in E]
    ge = [(list(rays[j]), 1) for j in range(t) if j not in inside]
    sol = lp_feasible(LinearSystem.build(m, eq=eq, ge=ge))
    if sol is None:
        return None
    return FaceCertificate(sol, E)


@dataclass(frozen=True)
class NonfaceFamily:
    """Minimal non-faces of pos(rays), as sorted 0-based index sets into ``rays``."""

    rays: tuple[Vector, ...]
    minimal_nonfaces: tuple[IndexSet, ...]
    duplicates: tuple[tuple[IndexSet, IndexSet], ...] = field(default=(), compare=False)

    def __len__(self) -> int:
        return len(self.minimal_nonfaces)

    def cone(self, i: int) -> RationalCone:
        E = self.minimal_nonfaces[i]
        return RationalCone(len(self.rays[0]) if self.rays else 0, tuple(self.rays[j] for j in E))


def subcone_contained(small: Sequence[Vector], big: Sequence[Vector], dim: int) -> bool:
    """pos(small) is contained in pos(big)."""
    cone = RationalCone(dim, tuple(big))
    bigset = set(big)
    return all(g in bigset or cone_membership(g, cone) for g in small)


def minimal_nonfaces(rays: Sequence[Vector], deadline: Deadline | None = None) -> NonfaceFamily:
    """All minimal non-faces of the cone generated by the extreme vectors ``rays``.

    Subsets are enumerated by size; a candidate is tested only when each of
    its maximal proper subsets is a face all of whose subsets are faces.
    """
    rays = tuple(tuple(r) for r in rays)
    if not rays:
        return NonfaceFamily((), ())
    dim = len(rays[0])
    ok, _ = is_strongly_convex(RationalCone(dim, rays))
    if not ok:
        raise ValueError("cone is not strongly convex")
    t = len(rays)
    hereditary: set[IndexSet] = {()}
    level: list[IndexSet] = [()]
    found: list[IndexSet] = []
    for size in range(1, t + 1):
        candidates = set()
        for base in level:
            start = base[-1] + 1 if base else 0
            for j in range(start, t):
                cand = base + (j,)
                if all(cand[:k] + cand[k + 1:] in hereditary for k in range(size)):
                    candidates.add(cand)
        next_level = []
        for cand in sorted(candidates):
            if deadline is not None:
                deadline.check("minimal non-face enumeration")
            if is_face(cand, rays) is None:
                found.append(cand)
            else:
                hereditary.add(cand)
                next_level.append(cand)
        level = next_level
        if not level:
            break

    # keep minimal elements under inclusion of the generated subcones
    found.sort(key=lambda E: (len(E), E))
    keep: list[IndexSet] = []
    dups: list[tuple[IndexSet, IndexSet]] = []
    gens = {E: [rays[j] for j in E] for E in found}
    for E in found:
        drop = False
        for F in found:
            if F == E:
                continue
            if subcone_contained(gens[F], gens[E], dim):
                if subcone_contained(gens[E], gens[F], dim):
                    if (len(F), F) < (len(E), E):
                        dups.append((F, E))
                        drop = True
                        break
                else:
                    drop = True
                    break
        if not drop:
            keep.append(E)
    return NonfaceFamily(rays, tuple(keep), tuple(dups))


def relint_intersection_nonempty(cones: Sequence[RationalCone]) -> Optional[tuple[Fraction, ...]]:
    """A common point of the relative interiors of ``cones``, or None.

    One joint LP: x free, and for each cone x = sum lambda_j g_j with all
    lambda_j >= 1.
    """
    if not cones:
        raise ValueError("need at least one cone")
    m = cones[0].ambient_dim
    for c in cones:
        if c.ambient_dim != m:
            raise ValueError("cones live in different dimensions")
    nlam = sum(len(c.generators) for c in cones)
    nv = m + nlam
    eq = []
    offset = m
    for c in cones:
        k = len(c.generators)
        for i in range(m):
            row = [0] * nv
            row[i] = -1
            for j, g in enumerate(c.generators):
                row[offset + j] = g[i]
            eq.append((row, 0))
        offset += k
    lower = [None] * m + [1] * nlam
    sol = lp_feasible(LinearSystem.build(nv, eq=eq, lower=lower))
    if sol is None:
        return None
    return sol[:m]


# ---------------------------------------------------------------------------
# Projections of cones
# ---------------------------------------------------------------------------

def _solve_rational(a: list[list[Fraction]], b: list[list[Fraction]]) -> Optional[list[list[Fraction]]]:
    """Some X with X @ a == b (rows), by Gauss-Jordan on a^T; None if inconsistent."""
    # X a = b  <=>  a^T X^T = b^T
    rows = len(a[0]) if a else 0  # equations: one per column of a
    unknowns = len(a)
    aug = [[a[k][i] for k in range(unknowns)] + [b[r][i] for r in range(len(b))] for i in range(rows)]
    piv_cols = []
    r = 0
    for c in range(unknowns):
        p = next((i for i in range(r, rows) if aug[i][c] != 0), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(rows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
    for i in range(r, rows):
        if any(aug[i][unknowns:]):
            return None
    xt = [[Fraction(0)] * len(b) for _ in range(unknowns)]
    for i, c in enumerate(piv_cols):
        for k in range(len(b)):
            xt[c][k] = aug[i][unknowns + k]
    return [[xt[c][k] for c in range(unknowns)] for k in range(len(b))]


@dataclass(frozen=True)
class Projection:
    """Linear map P: Q^m -> Q^r with P a_i = b_i for every column."""

    source: VectorConfiguration
    target: VectorConfiguration
    matrix: tuple[tuple[Fraction, ...], ...]

    def image(self, x: Sequence[int | Fraction]) -> tuple[Fraction, ...]:
        if len(x) != self.source.ambient_dim:
            raise ValueError("dimension mismatch")
        return tuple(sum((p * Fraction(v) for p, v in zip(row, x)), Fraction(0)) for row in self.matrix)

    def image_of_columns(self, indices: Iterable[int]) -> RationalCone:
        """pos(b_i : i in indices), the image of pos(a_i : i in indices)."""
        return RationalCone.from_vectors([self.target.columns[i] for i in indices], self.target.ambient_dim)

    def image_of_degree(self, u: Sequence[int]) -> Vector:
        return self.target.degree(u)


def project(source: VectorConfiguration, target: VectorConfiguration) -> Projection:
    """The projection of cones sending a_i to b_i; requires ker(A) inside ker(B)."""
    if source.n != target.n:
        raise ValueError("configurations have different numbers of columns")
    if not lattice_contains(target.kernel(), source.kernel()):
        raise ValueError("kernel of the source is not contained in the kernel of the target; "
                         "not a specialization")
    r, m = target.ambient_dim, source.ambient_dim
    if r == 0:
        return Projection(source, target, ())
    if m == 0:
        # every b_i must be zero, which kernel containment guarantees
        return Projection(source, target, tuple(() for _ in range(r)))
    a = [[Fraction(x) for x in row] for row in source.matrix()]
    b = [[Fraction(x) for x in row] for row in target.matrix()]
    P = _solve_rational(a, b)
    if P is None:
        raise AssertionError("no linear map although kernels are nested")
    return Projection(source, target, tuple(tuple(row) for row in P))


def identity_projection(config: VectorConfiguration) -> Projection:
    return project(config, config)


def zero_projection(config: VectorConfiguration) -> Projection:
    """Projection onto the trivial grading O (every b_i = 0 in Q^0)."""
    return project(config, VectorConfiguration(0, tuple(() for _ in config.columns)))


@dataclass(frozen=True)
class RayData:
    """Extreme vectors of sigma_A together with the column each one came from."""

    rays: tuple[Vector, ...]
    columns: tuple[int, ...]


def configuration_rays(config: VectorConfiguration) -> RayData:
    cone = RationalCone(config.ambient_dim, tuple(primitive(c) for c in config.columns))
    if any(not any(c) for c in config.columns):
        raise ValueError("configuration has a zero column; the grading is not positive")
    idx = extreme_rays(cone)
    return RayData(tuple(cone.generators[i] for i in idx), idx)
