"""Exact integer linear algebra and the lattice calculus.

Matrices are plain lists of rows of Python ints.  Nothing in this module
touches floating point: every normal form, kernel and lattice operation is
computed with unbounded integers.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

IntMatrix = list[list[int]]
Vector = tuple[int, ...]


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntMatrix:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(row[k] * b[k][j] for k in range(inner)) for j in range(cols)] for row in a]


def matvec(a: Sequence[Sequence[int]], v: Sequence[int]) -> list[int]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def transpose(a: Sequence[Sequence[int]], ncols: int | None = None) -> IntMatrix:
    if not a:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*a)]


def content(v: Iterable[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def primitive(v: Sequence[int]) -> Vector:
    """Divide an integer vector by the gcd of its entries."""
    g = content(v)
    if g == 0:
        return tuple(v)
    return tuple(x // g for x in v)


def det(a: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(r) for r in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rank(a: Sequence[Sequence[int]]) -> int:
    return len(hnf(a))


# ---------------------------------------------------------------------------
# Hermite normal form
# ---------------------------------------------------------------------------

def hnf(m: Sequence[Sequence[int]]) -> IntMatrix:
    """Canonical row Hermite normal form of the row span of ``m``.

    Pivots are positive, entries above a pivot lie in ``[0, pivot)`` and zero
    rows are dropped, so two matrices have the same output exactly when their
    rows span the same lattice.
    """
    rows = [list(r) for r in m if any(r)]
    if not rows:
        return []
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        while True:
            nz = [i for i in range(r, len(rows)) if rows[i][c] != 0]
            if not nz:
                break
            best = min(nz, key=lambda i: (abs(rows[i][c]), i))
            rows[r], rows[best] = rows[best], rows[r]
            done = True
            p = rows[r][c]
            for i in range(r + 1, len(rows)):
                if rows[i][c]:
                    q = rows[i][c] // p
                    rows[i] = [x - q * y for x, y in zip(rows[i], rows[r])]
                    if rows[i][c]:
                        done = False
            if done:
                break
        if rows[r][c] == 0:
            continue
        if rows[r][c] < 0:
            rows[r] = [-x for x in rows[r]]
        p = rows[r][c]
        for i in range(r):
            q = rows[i][c] // p
            if q:
                rows[i] = [x - q * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return [row for row in rows[:r]]


def _pivot_columns(basis: Sequence[Sequence[int]]) -> list[int]:
    return [next(j for j, x in enumerate(row) if x) for row in basis]


def reduce_vector(v: Sequence[int], basis: Sequence[Sequence[int]]) -> list[int]:
    """Reduce ``v`` against an HNF basis, putting each pivot coordinate in ``[0, pivot)``."""
    u = list(v)
    for row, p in zip(basis, _pivot_columns(basis)):
        q = u[p] // row[p]
        if q:
            u = [x - q * y for x, y in zip(u, row)]
    return u


def solve_in_hnf(v: Sequence[int], basis: Sequence[Sequence[int]]) -> list[int] | None:
    """Integer coefficients ``y`` with ``y @ basis == v``, or None if v is not in the span."""
    u = list(v)
    coeffs = []
    for row, p in zip(basis, _pivot_columns(basis)):
        if u[p] % row[p]:
            return None
        q = u[p] // row[p]
        coeffs.append(q)
        if q:
            u = [x - q * y for x, y in zip(u, row)]
    if any(u):
        return None
    return coeffs


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SNFResult:
    """``U @ M @ Q == diagonal(diag)`` with U, Q unimodular."""

    U: IntMatrix
    Q: IntMatrix
    diag: tuple[int, ...]
    shape: tuple[int, int]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diag if d)

    def diagonal_matrix(self) -> IntMatrix:
        r, c = self.shape
        out = [[0] * c for _ in range(r)]
        for i, d in enumerate(self.diag):
            out[i][i] = d
        return out


def snf(m: Sequence[Sequence[int]], ncols: int | None = None) -> SNFResult:
    """Smith normal form with transforms.

    Pivot choice: the smallest nonzero entry (by absolute value) of the
    active submatrix, ties broken by row-major scan order.
    """
    nrows = len(m)
    if ncols is None:
        ncols = len(m[0]) if m else 0
    d = [list(r) for r in m]
    U = identity(nrows)
    Q = identity(ncols)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in Q:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):  # row_dst += k * row_src
        d[dst] = [x + k * y for x, y in zip(d[dst], d[src])]
        U[dst] = [x + k * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, k):  # col_dst += k * col_src
        for row in d:
            row[dst] += k * row[src]
        for row in Q:
            row[dst] += k * row[src]

    t = 0
    while t < min(nrows, ncols):
        entries = [(abs(d[i][j]), i, j) for i in range(t, nrows) for j in range(t, ncols) if d[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = d[t][t]
            moved = False
            for i in range(t + 1, nrows):
                if d[i][t]:
                    add_row(i, t, -(d[i][t] // p))
            for j in range(t + 1, ncols):
                if d[t][j]:
                    add_col(j, t, -(d[t][j] // p))
            rest = [(abs(d[i][t]), i, t) for i in range(t + 1, nrows) if d[i][t]]
            rest += [(abs(d[t][j]), t, j) for j in range(t + 1, ncols) if d[t][j]]
            if rest:
                _, i, j = min(rest)
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            # row and column t are clear; enforce divisibility on the remainder
            for i in range(t + 1, nrows):
                if any(d[i][j] % p for j in range(t + 1, ncols)):
                    add_row(t, i, 1)
                    moved = True
                    break
            if not moved:
                break
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    diag = tuple(d[i][i] for i in range(min(nrows, ncols)))
    return SNFResult(U=U, Q=Q, diag=diag, shape=(nrows, ncols))


def invariant_factors(m: Sequence[Sequence[int]]) -> tuple[int, ...]:
    return tuple(x for x in snf(m).diag if x)


# ---------------------------------------------------------------------------
# Lattices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Lattice:
    """A sublattice of Z^n stored by its canonical row HNF basis."""

    ambient_rank: int
    basis: tuple[Vector, ...] = ()

    def __post_init__(self):
        for row in self.basis:
            if len(row) != self.ambient_rank:
                raise ValueError("basis row length does not match ambient rank")

    @classmethod
    def from_generators(cls, rows: Iterable[Sequence[int]], n: int) -> Lattice:
        rows = [list(r) for r in rows]
        for r in rows:
            if len(r) != n:
                raise ValueError(f"generator {r} does not live in Z^{n}")
        return cls(n, tuple(tuple(r) for r in hnf(rows)))

    @classmethod
    def zero(cls, n: int) -> Lattice:
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> Lattice:
        return cls(n, tuple(tuple(r) for r in identity(n)))

    @property
    def rank(self) -> int:
        return len(self.basis)

    def __contains__(self, v: Sequence[int]) -> bool:
        if len(v) != self.ambient_rank:
            raise ValueError("dimension mismatch")
        return solve_in_hnf(v, self.basis) is not None

    def matrix(self) -> IntMatrix:
        return [list(r) for r in self.basis]


def _check_same_ambient(a: Lattice, b: Lattice) -> None:
    if a.ambient_rank != b.ambient_rank:
        raise ValueError(f"ambient rank mismatch: {a.ambient_rank} vs {b.ambient_rank}")


def kernel_basis(m: Sequence[Sequence[int]], ncols: int | None = None) -> Lattice:
    """The full integer kernel ``{u : m @ u == 0}`` (always saturated)."""
    if ncols is None:
        if not m:
            raise ValueError("ncols is required for a matrix without rows")
        ncols = len(m[0])
    if not m or not any(any(r) for r in m):
        return Lattice.full(ncols)
    res = snf(m, ncols)
    r = res.rank
    gens = [[res.Q[i][j] for i in range(ncols)] for j in range(r, ncols)]
    return Lattice.from_generators(gens, ncols)


def lattice_sum(a: Lattice, b: Lattice) -> Lattice:
    _check_same_ambient(a, b)
    return Lattice.from_generators(list(a.basis) + list(b.basis), a.ambient_rank)


def lattice_intersection(a: Lattice, b: Lattice) -> Lattice:
    """Intersection via the kernel of ``[A^T | -B^T]``: ``x = y A = z B``."""
    _check_same_ambient(a, b)
    n = a.ambient_rank
    if a.rank == 0 or b.rank == 0:
        return Lattice.zero(n)
    ka, kb = a.rank, b.rank
    block = [[a.basis[i][c] for i in range(ka)] + [-b.basis[j][c] for j in range(kb)] for c in range(n)]
    ker = kernel_basis(block, ka + kb)
    gens = []
    for yz in ker.basis:
        y = yz[:ka]
        gens.append([sum(y[i] * a.basis[i][c] for i in range(ka)) for c in range(n)])
    return Lattice.from_generators(gens, n)


def lattice_contains(big: Lattice, small: Lattice) -> bool:
    """True iff ``small`` is a sublattice of ``big``."""
    _check_same_ambient(big, small)
    return all(solve_in_hnf(row, big.basis) is not None for row in small.basis)


def saturate(lat: Lattice) -> Lattice:
    """Sat(L): the kernel of a matrix spanning the orthogonal complement of L."""
    n = lat.ambient_rank
    if lat.rank == 0:
        return lat
    perp = kernel_basis(lat.matrix(), n)
    if perp.rank == 0:
        return Lattice.full(n)
    return kernel_basis(perp.matrix(), n)


def is_saturated(lat: Lattice) -> bool:
    return saturate(lat) == lat


@dataclass(frozen=True)
class GroupStructure:
    """Z^free_rank plus cyclic factors Z/torsion[i]."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __str__(self) -> str:
        parts = [f"Z^{self.free_rank}"] if self.free_rank else []
        parts += [f"Z_{t}" for t in self.torsion]
        return " + ".join(parts) or "0"


def group_structure(lat: Lattice) -> GroupStructure:
    """Structure of the quotient group Z^n / L."""
    if lat.rank == 0:
        return GroupStructure(lat.ambient_rank, ())
    diag = invariant_factors(lat.matrix())
    return GroupStructure(lat.ambient_rank - lat.rank, tuple(x for x in diag if x > 1))


def torsion_exponent(lat: Lattice) -> int:
    """Smallest d > 0 with d * Sat(L) contained in L."""
    diag = invariant_factors(lat.matrix()) if lat.rank else ()
    return diag[-1] if diag else 1


# ---------------------------------------------------------------------------
# Vector configurations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VectorConfiguration:
    """Ordered integer vectors a_1..a_n in Z^m; column i belongs to variable x_i."""

    ambient_dim: int
    columns: tuple[Vector, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        for col in self.columns:
            if len(col) != self.ambient_dim:
                raise ValueError("column length does not match ambient dimension")
        if self.labels is not None:
            if len(self.labels) != len(self.columns):
                raise ValueError("one label per column is required")
            if len(set(self.labels)) != len(self.labels):
                raise ValueError("labels must be unique")

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[int]], ncols: int | None = None,
                    labels: Sequence[str] | None = None) -> VectorConfiguration:
        m = len(rows)
        n = len(rows[0]) if rows else (ncols or 0)
        cols = tuple(tuple(rows[i][j] for i in range(m)) for j in range(n))
        return cls(m, cols, tuple(labels) if labels is not None else None)

    @property
    def n(self) -> int:
        return len(self.columns)

    def matrix(self) -> IntMatrix:
        return [[col[i] for col in self.columns] for i in range(self.ambient_dim)]

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i + 1)

    def kernel(self) -> Lattice:
        if self.ambient_dim == 0:
            return Lattice.full(self.n)
        return kernel_basis(self.matrix(), self.n)

    def degree(self, u: Sequence[int]) -> Vector:
        if len(u) != self.n:
            raise ValueError(f"exponent vector has length {len(u)}, expected {self.n}")
        return tuple(sum(ui * col[i] for ui, col in zip(u, self.columns)) for i in range(self.ambient_dim))


def configuration_from_lattice(lat: Lattice) -> VectorConfiguration:
    """Columns of the last n-k rows of U from the SNF of the basis-column matrix.

    The kernel of the result is Sat(L).  For rank(L) = n this is the empty
    configuration in Z^0 (every column is the zero vector of length 0).
    """
    n, k = lat.ambient_rank, lat.rank
    if k == 0:
        return VectorConfiguration(n, tuple(tuple(r) for r in identity(n)))
    if k == n:
        return VectorConfiguration(0, tuple(() for _ in range(n)))
    res = snf(transpose(lat.matrix()), k)
    rows = res.U[k:]
    return VectorConfiguration.from_matrix(rows)
