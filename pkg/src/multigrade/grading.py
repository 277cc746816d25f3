"""Multigradings of K[x_1..x_n] by finitely generated abelian groups.

A grading is identified with its relation lattice L (the group is Z^n / L,
generated by the cosets e_i + L).  Specialization, equivalence, meet and
join are then statements about lattices.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Iterable, Optional, Sequence

from .linalg import (GroupStructure, Lattice, Vector, VectorConfiguration,
                     configuration_from_lattice, group_structure, lattice_contains,
                     lattice_intersection, lattice_sum, primitive, reduce_vector,
                     saturate, torsion_exponent)
from .lp import LinearSystem, lp_feasible


@dataclass(frozen=True)
class Grading:
    relation_lattice: Lattice

    @classmethod
    def from_lattice(cls, lat: Lattice) -> Grading:
        return cls(lat)

    @classmethod
    def from_generators(cls, rows: Iterable[Sequence[int]], n: int) -> Grading:
        return cls(Lattice.from_generators(rows, n))

    @classmethod
    def from_configuration(cls, config: VectorConfiguration) -> Grading:
        """The grading by the group ZA, deg(e_i) = a_i."""
        return cls(config.kernel())

    @classmethod
    def finest(cls, n: int) -> Grading:
        """Z^n with the unit vectors as generators."""
        return cls(Lattice.zero(n))

    @classmethod
    def trivial(cls, n: int) -> Grading:
        """The zero group O."""
        return cls(Lattice.full(n))

    @property
    def n(self) -> int:
        return self.relation_lattice.ambient_rank

    @cached_property
    def group(self) -> GroupStructure:
        return group_structure(self.relation_lattice)

    @cached_property
    def configuration(self) -> VectorConfiguration:
        """Some A with ker(A) = Sat(L)."""
        return configuration_from_lattice(self.relation_lattice)

    def saturation(self) -> Grading:
        return Grading(saturate(self.relation_lattice))


def _same_n(f: Grading, g: Grading) -> None:
    if f.n != g.n:
        raise ValueError(f"gradings on different numbers of variables: {f.n} vs {g.n}")


def is_specialization(f: Grading, g: Grading) -> bool:
    """F <= G, i.e. L_G is contained in L_F."""
    _same_n(f, g)
    return lattice_contains(f.relation_lattice, g.relation_lattice)


def is_equivalent(f: Grading, g: Grading) -> bool:
    _same_n(f, g)
    return f.relation_lattice == g.relation_lattice


def meet(f: Grading, g: Grading) -> Grading:
    _same_n(f, g)
    return Grading(lattice_sum(f.relation_lattice, g.relation_lattice))


def join(f: Grading, g: Grading) -> Grading:
    _same_n(f, g)
    return Grading(lattice_intersection(f.relation_lattice, g.relation_lattice))


# ---------------------------------------------------------------------------
# Degrees and polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DegreeClass:
    """The coset u + L_F, stored by its canonical representative."""

    ambient_rank: int
    representative: Vector


def degree(u: Sequence[int], f: Grading) -> DegreeClass:
    if len(u) != f.n:
        raise ValueError(f"exponent vector of length {len(u)} for a grading on {f.n} variables")
    return DegreeClass(f.n, tuple(reduce_vector(u, f.relation_lattice.basis)))


_TERM = re.compile(r"\s*([+-])?\s*([^+-]+)")


@dataclass(frozen=True)
class Polynomial:
    """A nonzero-coefficient sum of monomials, in first-appearance order."""

    n: int
    terms: tuple[tuple[Vector, Fraction], ...]

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Sequence[int], Fraction | int | str]], n: int) -> Polynomial:
        acc: dict[Vector, Fraction] = {}
        for exp, coeff in terms:
            exp = tuple(int(e) for e in exp)
            if len(exp) != n:
                raise ValueError(f"exponent {exp} is not of length {n}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            acc[exp] = acc.get(exp, Fraction(0)) + Fraction(coeff)
        return cls(n, tuple((e, c) for e, c in acc.items() if c != 0))

    @classmethod
    def binomial(cls, plus: Sequence[int], minus: Sequence[int]) -> Polynomial:
        return cls.from_terms([(plus, 1), (minus, -1)], len(plus))

    @classmethod
    def parse(cls, text: str, variables: Sequence[str]) -> Polynomial:
        """Parse e.g. ``"x14*x23 - 2*x12^2*x34"``; variables are named ``x<label>``."""
        index = {f"x{v}": i for i, v in enumerate(variables)}
        n = len(variables)
        terms = []
        body = text.replace("(", " ").replace(")", " ")
        for sign, chunk in _TERM.findall(body):
            chunk = chunk.strip()
            if not chunk:
                continue
            coeff = Fraction(-1 if sign == "-" else 1)
            exp = [0] * n
            for factor in chunk.split("*"):
                factor = factor.strip()
                name, _, power = factor.partition("^")
                if name in index:
                    exp[index[name]] += int(power or 1)
                else:
                    coeff *= Fraction(factor)
            terms.append((exp, coeff))
        return cls.from_terms(terms, n)

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def monomials(self) -> list[Vector]:
        return [e for e, _ in self.terms]

    def format(self, labels: Sequence[str] | None = None) -> str:
        names = [f"x{l}" for l in labels] if labels else [f"x{i + 1}" for i in range(self.n)]
        out = []
        for k, (exp, c) in enumerate(self.terms):
            mono = "*".join(
                names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(exp) if e
            ) or "1"
            mag = abs(c)
            body = mono if mag == 1 else (f"{mag}*{mono}" if mono != "1" else str(mag))
            if k == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)


def _require_nonzero(p: Polynomial) -> None:
    if not p.terms:
        raise ValueError("the zero polynomial is not allowed here")


def homogeneous_components(p: Polynomial, f: Grading) -> list[Polynomial]:
    """Split ``p`` by F-degree; components keep first-appearance order."""
    _require_nonzero(p)
    if p.n != f.n:
        raise ValueError("polynomial and grading have different numbers of variables")
    parts: dict[DegreeClass, list] = {}
    for exp, c in p.terms:
        parts.setdefault(degree(exp, f), []).append((exp, c))
    return [Polynomial(p.n, tuple(ts)) for ts in parts.values()]


def is_homogeneous(p: Polynomial, f: Grading) -> bool:
    return len(homogeneous_components(p, f)) == 1


def finest_grading(polys: Sequence[Polynomial], n: int) -> Grading:
    """Finest grading making every polynomial homogeneous (lattice of monomial differences)."""
    gens = []
    for p in polys:
        _require_nonzero(p)
        if p.n != n:
            raise ValueError("polynomial does not live in the stated ring")
        first = p.terms[0][0]
        gens += [[a - b for a, b in zip(exp, first)] for exp, _ in p.terms[1:]]
    return Grading(Lattice.from_generators(gens, n))


def finest_grading_below(polys: Sequence[Polynomial], g: Grading) -> Grading:
    """Finest H with every polynomial H-homogeneous and H <= G."""
    return meet(finest_grading(polys, g.n), g)


# ---------------------------------------------------------------------------
# Positivity
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PositivityWitness:
    """Exactly one of ``covector`` (c . a_i > 0 for all i) or ``violating``
    (a nonzero vector of L with nonnegative entries)."""

    covector: Optional[tuple[Fraction, ...]] = None
    violating: Optional[Vector] = None

    def __post_init__(self):
        if (self.covector is None) == (self.violating is None):
            raise ValueError("exactly one witness must be given")

    @property
    def positive(self) -> bool:
        return self.covector is not None


def is_positive(g: Grading) -> PositivityWitness:
    """Decide L_G meet N^n == {0} by LP feasibility of {c . a_i >= 1}."""
    a = g.configuration
    m, n = a.ambient_dim, a.n
    if m:
        sol = lp_feasible(LinearSystem.build(m, ge=[(list(col), 1) for col in a.columns]))
        if sol is not None:
            return PositivityWitness(covector=sol)
    # Farkas alternative: y >= 0, sum y = 1, A y = 0
    eq = [([col[i] for col in a.columns], 0) for i in range(m)]
    eq.append(([1] * n, 1))
    y = lp_feasible(LinearSystem.build(n, eq=eq, lower=[0] * n))
    assert y is not None, "Farkas alternative failed"
    den = lcm(*(v.denominator for v in y))
    u = primitive([int(v * den) for v in y])
    u = tuple(torsion_exponent(g.relation_lattice) * x for x in u)
    assert u in g.relation_lattice
    return PositivityWitness(violating=u)


def positive_integer_specialization(g: Grading) -> tuple[int, ...]:
    """Positive integers m_i with the rank-one grading deg(e_i) = m_i below G."""
    w = is_positive(g)
    if not w.positive:
        raise ValueError(f"grading is not positive: {w.violating} lies in the relation lattice")
    c = w.covector
    scale = lcm(*(x.denominator for x in c))
    ms = tuple(int(sum(ci * scale * ai for ci, ai in zip(c, col))) for col in g.configuration.columns)
    return ms
