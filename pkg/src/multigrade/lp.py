"""Exact LP feasibility.

A phase-one simplex over the integers (fraction-free tableau, Bland's rule).
Only feasibility is ever needed downstream: every geometric question in the
package is phrased as "does this system of weak linear constraints have a
rational solution", with strict inequalities encoded as ``>= 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence

Rational = Fraction | int


def _frac_row(row: Sequence[Rational]) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in row)


@dataclass(frozen=True)
class LinearSystem:
    """Constraints ``eq_lhs @ x == eq_rhs`` and ``ge_lhs @ x >= ge_rhs``.

    ``lower`` optionally gives a lower bound per variable (None for a free
    variable).  Bounds are ordinary weak inequalities; they are kept apart
    only because the tableau handles them without extra rows.
    """

    nvars: int
    eq_lhs: tuple[tuple[Fraction, ...], ...] = ()
    eq_rhs: tuple[Fraction, ...] = ()
    ge_lhs: tuple[tuple[Fraction, ...], ...] = ()
    ge_rhs: tuple[Fraction, ...] = ()
    lower: tuple[Optional[Fraction], ...] | None = None

    @classmethod
    def build(cls, nvars: int,
              eq: Sequence[tuple[Sequence[Rational], Rational]] = (),
              ge: Sequence[tuple[Sequence[Rational], Rational]] = (),
              lower: Sequence[Optional[Rational]] | None = None) -> LinearSystem:
        for row, _ in list(eq) + list(ge):
            if len(row) != nvars:
                raise ValueError(f"constraint row has {len(row)} entries, expected {nvars}")
        if lower is not None and len(lower) != nvars:
            raise ValueError("one lower bound (or None) per variable is required")
        return cls(
            nvars,
            tuple(_frac_row(r) for r, _ in eq), tuple(Fraction(b) for _, b in eq),
            tuple(_frac_row(r) for r, _ in ge), tuple(Fraction(b) for _, b in ge),
            None if lower is None else tuple(None if b is None else Fraction(b) for b in lower),
        )

    def is_satisfied_by(self, x: Sequence[Rational]) -> bool:
        if len(x) != self.nvars:
            return False
        for row, b in zip(self.eq_lhs, self.eq_rhs):
            if sum(a * v for a, v in zip(row, x)) != b:
                return False
        for row, b in zip(self.ge_lhs, self.ge_rhs):
            if sum(a * v for a, v in zip(row, x)) < b:
                return False
        if self.lower is not None:
            for v, lb in zip(x, self.lower):
                if lb is not None and v < lb:
                    return False
        return True


def _integer_row(coeffs: list[Fraction], rhs: Fraction) -> list[int]:
    den = 1
    for c in coeffs:
        if c.denominator != 1:
            den = lcm(den, c.denominator)
    if rhs.denominator != 1:
        den = lcm(den, rhs.denominator)
    row = [int(c * den) for c in coeffs] + [int(rhs * den)]
    if row[-1] < 0:
        row = [-x for x in row]
    return row


def _normalize(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        return [x // g for x in row]
    return row


def lp_feasible(system: LinearSystem) -> Optional[tuple[Fraction, ...]]:
    """Return an exact solution of ``system`` or None if it is infeasible."""
    n = system.nvars
    lower = system.lower or (None,) * n

    # column layout: shifted/split structural columns, then slacks
    col_of: list[tuple[int, int]] = []  # per variable: (pos column, neg column or -1)
    ncols = 0
    for lb in lower:
        if lb is None:
            col_of.append((ncols, ncols + 1))
            ncols += 2
        else:
            col_of.append((ncols, -1))
            ncols += 1
    nstruct = ncols
    nslack = len(system.ge_lhs)
    ncols += nslack

    shift = [lb if lb is not None else Fraction(0) for lb in lower]
    rows: list[list[int]] = []

    def expand(lhs: tuple[Fraction, ...], rhs: Fraction, slack: int) -> list[int]:
        coeffs = [Fraction(0)] * ncols
        for j, a in enumerate(lhs):
            if a:
                p, q = col_of[j]
                coeffs[p] = a
                if q >= 0:
                    coeffs[q] = -a
        if slack >= 0:
            coeffs[nstruct + slack] = Fraction(-1)
        rhs = rhs - sum(a * s for a, s in zip(lhs, shift))
        return _integer_row(coeffs, rhs)

    for lhs, rhs in zip(system.eq_lhs, system.eq_rhs):
        rows.append(expand(lhs, rhs, -1))
    for k, (lhs, rhs) in enumerate(zip(system.ge_lhs, system.ge_rhs)):
        rows.append(expand(lhs, rhs, k))

    # trivially empty rows
    live = []
    for r in rows:
        if not any(r[:-1]):
            if r[-1] != 0:
                return None
        else:
            live.append(r)
    rows = live
    m = len(rows)

    # artificial columns ncols..ncols+m-1, one per row, initially basic
    total = ncols + m
    tab = [r[:-1] + [int(i == k) for k in range(m)] + [r[-1]] for i, r in enumerate(rows)]
    basis = [ncols + i for i in range(m)]
    obj = [sum(r[j] for r in tab) if j < ncols else 0 for j in range(total)]
    obj.append(sum(r[-1] for r in tab))

    while True:
        enter = next((j for j in range(ncols) if obj[j] > 0), -1)
        if enter < 0:
            break
        leave = -1
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                if leave < 0:
                    leave = i
                    continue
                # compare rhs_i / a against rhs_leave / a_leave
                lhs_cmp = tab[i][-1] * tab[leave][enter]
                rhs_cmp = tab[leave][-1] * a
                if lhs_cmp < rhs_cmp or (lhs_cmp == rhs_cmp and basis[i] < basis[leave]):
                    leave = i
        if leave < 0:
            # unbounded decrease of the phase-one objective is impossible
            raise AssertionError("phase-one objective unbounded")
        prow = tab[leave]
        p = prow[enter]
        for i in range(m):
            if i != leave:
                f = tab[i][enter]
                if f:
                    tab[i] = _normalize([p * x - f * y for x, y in zip(tab[i], prow)])
        f = obj[enter]
        obj = _normalize([p * x - f * y for x, y in zip(obj, prow)])
        basis[leave] = enter

    if obj[-1] != 0:
        return None

    values = [Fraction(0)] * total
    for i, b in enumerate(basis):
        values[b] = Fraction(tab[i][-1], tab[i][b])
    x = []
    for j in range(n):
        p, q = col_of[j]
        v = values[p] - (values[q] if q >= 0 else 0) + shift[j]
        x.append(v)
    result = tuple(x)
    if not system.is_satisfied_by(result):
        raise AssertionError("simplex returned a point that violates the system")
    return result
