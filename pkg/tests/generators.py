"""Seeded random instances shared by the property tests and the acceptance suite."""
import itertools
import random

from multigrade.complexes import SimplicialComplex, build_complex, prepare
from multigrade.cones import identity_projection, zero_projection
from multigrade.grading import Polynomial
from multigrade.linalg import VectorConfiguration


def pointed_configuration(rng: random.Random, max_dim=4, max_cols=6) -> VectorConfiguration:
    # dimension >= 3 and more columns than the dimension, so non-faces can occur
    dim = rng.randint(3, max_dim)
    target = rng.randint(dim + 1, max_cols)
    cols = set()
    while len(cols) < target:
        cols.add((rng.randint(1, 3),) + tuple(rng.randint(-2, 2) for _ in range(dim - 1)))
    return VectorConfiguration(dim, tuple(sorted(cols)))


def specialization_of(rng: random.Random, a: VectorConfiguration) -> VectorConfiguration:
    """B = P . A for a random integer P, so ker A is inside ker B."""
    k = rng.randint(1, 3)
    p = [[rng.randint(-1, 2) for _ in range(a.ambient_dim)] for _ in range(k)]
    cols = tuple(tuple(sum(p[r][i] * c[i] for i in range(a.ambient_dim)) for r in range(k)) for c in a.columns)
    return VectorConfiguration(k, cols)


class Instance:
    """A, B, the cone data and the three complexes D_G^G, D_F^G, D_O^G."""

    def __init__(self, rng: random.Random):
        self.a = pointed_configuration(rng)
        self.b = specialization_of(rng, self.a)
        self.data = prepare(self.a, self.b)
        fam, lab = self.data.family, self.data.labels
        self.d_gg = build_complex(identity_projection(self.a), fam, lab)
        self.d_fg = build_complex(self.data.projection, fam, lab)
        self.d_og = build_complex(zero_projection(self.a), fam, lab)


def homogeneous_polynomial(rng: random.Random, cfg_a: VectorConfiguration, cfg_b: VectorConfiguration,
                           data) -> Polynomial:
    """A ZB-homogeneous polynomial whose monomials aim at several non-faces.

    Candidate monomials put small positive exponents on the columns of one
    minimal non-face; the polynomial is the largest group of candidates
    sharing a B-degree, or a random single candidate.
    """
    n = cfg_a.n
    groups: dict[tuple, set] = {}
    for E in data.family.minimal_nonfaces:
        cols = [data.rays.columns[j] for j in E]
        for coeffs in itertools.product((1, 2, 3), repeat=len(cols)):
            u = [0] * n
            for c, k in zip(cols, coeffs):
                u[c] = k
            groups.setdefault(cfg_b.degree(u), set()).add(tuple(u))
    if not groups:
        u = [rng.randint(0, 2) for _ in range(n)]
        u[0] += 1
        return Polynomial.from_terms([(u, 1)], n)
    if rng.random() < 0.7:
        monos = max(groups.values(), key=lambda g: (len(g), sorted(g)))
    else:
        monos = rng.choice(sorted(groups.values(), key=sorted))
    return Polynomial.from_terms([(m, rng.choice((1, -1, 2))) for m in sorted(monos)], n)


def random_complex(rng: random.Random, max_vertices=10) -> SimplicialComplex:
    f = rng.randint(1, max_vertices)
    faces = []
    for _ in range(rng.randint(0, 6)):
        k = rng.randint(2, min(5, f)) if f >= 2 else 1
        faces.append(rng.sample(range(f), k))
    return SimplicialComplex.from_faces([f"E{i + 1}" for i in range(f)], faces, range(f))
