"""Lower and upper bounds for the toric ideal of the cube graph.

The cube graph has 8 vertices and 12 edges.  Its edge configuration
a_ij = e_i + e_j defines a grading G of K[x_12, ..., x_78], and the toric
ideal I_L of the relation lattice L is generated by binomials.  We compare two
gradings: G itself and the much coarser grading F given by twelve vectors
b_ij in Z^4.

Run with ``python3 demos/cube_walkthrough.py``.
"""
from multigrade import cube
from multigrade.complexes import bound_report, prepare, verify_cover_conditions
from multigrade.configurations import circuits
from multigrade.grading import homogeneous_components
from multigrade.io import report_to_text

A = cube.configuration()
B = cube.b_configuration()

# The toric ideal: 28 circuits, one for every even cycle of the cube.
cs = circuits(A)
print(f"{len(cs)} circuits, e.g. {cs[0].binomial(A.labels)}")

# Vertices of both complexes are the minimal non-faces of the cone spanned by A.
data = prepare(A, B)
print("minimal non-faces:", " ".join(data.labels))

# Under G, every generating set up to radical needs at least 10 polynomials,
# and the first ten circuits achieve it.
rep_g = bound_report(A, None, {"circuits10": cube.circuit_generators()})
print(f"\nG-homogeneous: gamma = {rep_g.gamma}, delta = {rep_g.delta}")
print(rep_g.conclusion)

# F is a specialization of G, so F-homogeneous generators may mix circuits.
# The seventh polynomial below sums four cubic circuits; it splits into four
# pieces under G but is a single F-homogeneous piece.
seven = cube.radical_generators()
print(f"\nseventh generator: {len(homogeneous_components(seven[6], data.grading_g))} G-components, "
      f"{len(homogeneous_components(seven[6], data.grading_f))} F-component")

rep_f = bound_report(A, B, {"radical7": seven}, data=data)
print()
print(report_to_text(rep_f), end="")

# A negative control: the six quadrics leave the eight cubic non-faces uncovered.
cover = verify_cover_conditions(cube.circuit_generators()[:6], data.grading_g, rep_f.complex_gg, data)
print("\nsix quadrics cover every vertex:", cover.spanning)
print("uncovered:", " ".join(data.labels[v] for v in sorted(cover.uncovered)))
