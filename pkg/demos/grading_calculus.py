"""Gradings as relation lattices.

A grading of K[x_1, ..., x_n] by an abelian group with n generators is fixed
by the lattice of exponent differences that get degree zero.  Coarser
gradings have larger lattices, so comparing, meeting and joining gradings is
lattice arithmetic.
"""
from multigrade.grading import (Grading, Polynomial, finest_grading, is_positive, is_specialization, join, meet,
                                positive_integer_specialization)
from multigrade.linalg import group_structure, snf

f = Grading.from_generators([[2, 0, -2]], 3)
g = Grading.from_generators([[1, -1, 0]], 3)
print("F group:", group_structure(f.relation_lattice))
print("G group:", group_structure(g.relation_lattice))

# Neither refines the other, but they have a common coarsening and refinement.
print("F <= G:", is_specialization(f, g), " G <= F:", is_specialization(g, f))
print("meet lattice:", meet(f, g).relation_lattice.basis)
print("join lattice:", join(f, g).relation_lattice.basis)

# The finest grading making a binomial homogeneous.
p = Polynomial.binomial([1, 1, 0], [0, 0, 2])
h = finest_grading([p], 3)
print("\nx1*x2 - x3^2 is homogeneous for the lattice", h.relation_lattice.basis)

# Positivity: no nonzero monomial has degree zero.  Then a positive Z-grading
# sits below the grading, here deg x_i = m_i.
w = is_positive(h)
print("positive:", w.positive, " weights:", positive_integer_specialization(h))
bad = Grading.from_generators([[1, 1, 0]], 3)
print("lattice <(1,1,0)> positive:", is_positive(bad).positive, " witness:", is_positive(bad).violating)

# Everything underneath is exact: the Smith form gives the group structure.
res = snf([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
print("\ninvariant factors:", res.diag)
