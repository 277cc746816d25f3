import random

from hypothesis import given, settings, strategies as st

from multigrade.linalg import (Lattice, VectorConfiguration, configuration_from_lattice, det, group_structure,
                               hnf, identity, invariant_factors, is_saturated, kernel_basis, lattice_contains,
                               lattice_intersection, lattice_sum, matmul, saturate, snf, torsion_exponent)
from oracles import in_lattice, invariant_factors_by_minors, rational_rank

from multigrade import cube

matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r)))


def is_canonical_hnf(h):
    last = -1
    for row in h:
        p = next(i for i, x in enumerate(row) if x)
        if p <= last or row[p] <= 0:
            return False
        for above in h[:h.index(row)]:
            if not 0 <= above[p] < row[p]:
                return False
        last = p
    return True


def test_hnf_examples():
    assert hnf(identity(3)) == identity(3)
    assert hnf([[2, 4], [1, 1]]) == [[1, 1], [0, 2]]
    assert hnf([[0, 0], [0, 0]]) == []


@given(matrices)
def test_hnf_span_and_shape(m):
    h = hnf(m)
    assert is_canonical_hnf(h)
    assert len(h) == rational_rank(m)
    assert all(in_lattice(h, row) for row in m)
    assert hnf(h) == h


@given(matrices, st.randoms(use_true_random=False))
def test_hnf_ignores_generator_order(m, rnd):
    shuffled = [r[:] for r in m]
    rnd.shuffle(shuffled)
    assert hnf(shuffled) == hnf(m)


def test_hnf_volume_matches_det():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(1, 4)
        m = [[rng.randint(-20, 20) for _ in range(n)] for _ in range(n)]
        d = det(m)
        if d == 0:
            continue
        h = hnf(m)
        prod = 1
        for i, row in enumerate(h):
            prod *= row[i]
        assert prod == abs(d)


def test_snf_examples():
    assert snf(identity(3)).diag == (1, 1, 1)
    assert snf([[2, 0], [0, 3]]).diag == (1, 6)
    assert snf([[2], [-2]]).diag == (2,)


@settings(max_examples=200)
@given(matrices)
def test_snf_invariants(m):
    res = snf(m)
    assert matmul(matmul(res.U, m), res.Q) == res.diagonal_matrix()
    assert abs(det(res.U)) == 1 and abs(det(res.Q)) == 1
    nz = [d for d in res.diag if d]
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert list(invariant_factors(m)) == invariant_factors_by_minors(m)


def test_kernel_examples():
    assert kernel_basis(identity(3)) == Lattice.zero(3)
    assert kernel_basis([[1, 1]]) == Lattice.from_generators([[1, -1]], 2)
    assert kernel_basis(cube.configuration().matrix()).rank == 5


@given(matrices)
def test_kernel_is_annihilated(m):
    k = kernel_basis(m)
    assert k.rank == len(m[0]) - rational_rank(m)
    for v in k.basis:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m)
    assert is_saturated(k)


def test_sum_and_intersection_examples():
    a = Lattice.from_generators([[2, 0]], 2)
    b = Lattice.from_generators([[0, 3]], 2)
    assert lattice_sum(a, b).basis == ((2, 0), (0, 3))
    assert lattice_intersection(a, b) == Lattice.zero(2)
    assert lattice_sum(a, Lattice.zero(2)) == a
    assert lattice_intersection(a, Lattice.full(2)) == a
    assert lattice_sum(a, a) == a


def test_intersection_against_box_enumeration():
    rng = random.Random(11)
    for _ in range(30):
        gens_a = [[rng.randint(-4, 4) for _ in range(2)] for _ in range(rng.randint(1, 2))]
        gens_b = [[rng.randint(-4, 4) for _ in range(2)] for _ in range(rng.randint(1, 2))]
        a, b = Lattice.from_generators(gens_a, 2), Lattice.from_generators(gens_b, 2)
        both = lattice_intersection(a, b)
        for x in range(-8, 9):
            for y in range(-8, 9):
                expect = in_lattice(list(a.basis), [x, y]) and in_lattice(list(b.basis), [x, y])
                assert ((x, y) in both) == expect


def test_containment():
    lat = Lattice.from_generators([[1, 0]], 2)
    other = Lattice.from_generators([[0, 1]], 2)
    assert lattice_contains(lat, lat)
    assert not lattice_contains(lat, other) and not lattice_contains(other, lat)
    assert lattice_contains(cube.b_configuration().kernel(), cube.configuration().kernel())


def test_saturation_examples():
    assert saturate(Lattice.zero(3)) == Lattice.zero(3)
    assert saturate(Lattice.from_generators([[2, -2]], 2)) == Lattice.from_generators([[1, -1]], 2)
    lg = cube.configuration().kernel()
    assert saturate(lg) == lg


@given(matrices, matrices)
def test_saturation_laws(m1, m2):
    n = len(m1[0])
    small = Lattice.from_generators(m1, n)
    big = lattice_sum(small, Lattice.from_generators([r[:n] + [0] * (n - len(r)) for r in m2], n))
    s = saturate(small)
    assert saturate(s) == s
    assert lattice_contains(s, small)
    assert lattice_contains(saturate(big), s)
    assert s.rank == small.rank


def test_group_structure():
    g = group_structure(Lattice.zero(3))
    assert (g.free_rank, g.torsion) == (3, ())
    g = group_structure(Lattice.from_generators([[2, -2]], 2))
    assert (g.free_rank, g.torsion) == (1, (2,))
    assert str(g) == "Z^1 + Z_2"
    g = group_structure(cube.configuration().kernel())
    assert (g.free_rank, g.torsion) == (7, ())
    assert torsion_exponent(Lattice.from_generators([[4, 0], [0, 6]], 2)) == 12


def test_configuration_from_lattice():
    assert configuration_from_lattice(Lattice.zero(3)).kernel() == Lattice.zero(3)
    cfg = configuration_from_lattice(Lattice.from_generators([[1, -1]], 2))
    assert cfg.ambient_dim == 1 and cfg.columns[0] == cfg.columns[1]
    lg = cube.configuration().kernel()
    assert configuration_from_lattice(lg).kernel() == lg


@given(matrices)
def test_configuration_round_trip(m):
    lat = saturate(Lattice.from_generators(m, len(m[0])))
    cfg = configuration_from_lattice(lat)
    assert isinstance(cfg, VectorConfiguration)
    assert cfg.kernel() == lat
