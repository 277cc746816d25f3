import itertools
import random

import pytest

from multigrade import cube
from multigrade.complexes import (SimplicialComplex, bound_report, build_complex, chromatic_number, delta_omega,
                                  is_simplex, is_spanning, is_subcomplex, polynomial_subcomplex, skeleton_complement,
                                  union, verify_cover_conditions)
from multigrade.configurations import Graph
from multigrade.cones import zero_projection
from multigrade.grading import Grading, Polynomial, is_homogeneous
from generators import Instance, homogeneous_polynomial, random_complex
from oracles import delta_by_matchings, fm_relint_meet


def test_complex_validation():
    with pytest.raises(ValueError):
        SimplicialComplex(("a", "b"), frozenset({0, 1}), (frozenset({0, 1}), frozenset({0})))
    with pytest.raises(ValueError):
        SimplicialComplex(("a", "b"), frozenset({0, 1}), (frozenset({0}),))
    c = SimplicialComplex.from_faces(["a", "b", "c"], [[0, 1], [0]], [0, 1, 2])
    assert c.facets == (frozenset({0, 1}), frozenset({2})) or set(c.facets) == {frozenset({0, 1}), frozenset({2})}
    assert c.is_face([]) and c.is_face([1]) and not c.is_face([1, 2])
    assert c.dim == 1 and c.omega == (0, 1)


def test_spanning_and_simplex():
    full = SimplicialComplex.from_faces(["a", "b", "c"], [[0, 1, 2]])
    assert is_spanning(full, full)
    assert is_simplex(full)
    empty = SimplicialComplex(("a", "b", "c"), frozenset(), ())
    assert is_simplex(empty)
    loose = SimplicialComplex.from_faces(["a", "b", "c"], [], [0, 1, 2])
    assert not is_simplex(loose)
    assert is_spanning(loose, full)
    with pytest.raises(ValueError):
        is_spanning(full, loose)
    assert union([loose, full]) == full


def test_skeleton_complement():
    full = SimplicialComplex.from_faces(["a", "b", "c"], [[0, 1, 2]])
    g, _ = skeleton_complement(full)
    assert g.edges == ()
    loose = SimplicialComplex.from_faces(["a", "b", "c", "d"], [], range(4))
    g, _ = skeleton_complement(loose)
    assert len(g.edges) == 6


def test_chromatic_examples():
    k4 = Graph.from_edges(itertools.combinations(range(1, 5), 2))
    res = chromatic_number(k4)
    assert res.number == 4 and res.verify(k4)
    empty = Graph(5, ())
    assert chromatic_number(empty).number == 1
    c5 = Graph.from_edges([(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
    res = chromatic_number(c5)
    assert res.number == 3 and res.verify(c5)


def brute_chromatic(g):
    for k in range(1, g.vertices + 1):
        for col in itertools.product(range(k), repeat=g.vertices):
            if all(col[i - 1] != col[j - 1] for i, j in g.edges):
                return k
    return 0


def test_chromatic_matches_brute_force():
    rng = random.Random(31)
    for _ in range(40):
        n = rng.randint(1, 7)
        edges = [e for e in itertools.combinations(range(1, n + 1), 2) if rng.random() < 0.5]
        g = Graph(n, tuple(edges))
        res = chromatic_number(g)
        assert res.verify(g)
        assert res.number == brute_chromatic(g)


def test_delta_examples():
    simplex = SimplicialComplex.from_faces(["a", "b", "c"], [[0, 1, 2]])
    assert delta_omega(simplex).value == 1
    points = SimplicialComplex.from_faces(["a", "b", "c"], [], range(3))
    assert delta_omega(points).value == 3


def test_delta_matches_matching_oracle_and_bounds_gamma():
    rng = random.Random(41)
    for _ in range(60):
        c = random_complex(rng)
        d = delta_omega(c)
        support, card = delta_by_matchings(sorted(c.vertices), c.facets)
        assert support == len(c.vertices)
        assert d.value == card
        parts = d.matching
        assert all(c.is_face(p) for p in parts)
        assert all(not (p & q) for p, q in itertools.combinations(parts, 2))
        assert frozenset().union(*parts) == c.vertices
        g, _ = skeleton_complement(c)
        assert chromatic_number(g).number <= d.value


def test_random_specializations_chain_and_simplex_property():
    rng = random.Random(53)
    for _ in range(15):
        inst = Instance(rng)
        f = len(inst.data.family)
        assert inst.d_og.facets == ((frozenset(range(f)),) if f else ())
        assert build_complex(inst.data.projection, inst.data.family, method="sweep").facets == inst.d_fg.facets
        assert is_subcomplex(inst.d_gg, inst.d_fg) and is_subcomplex(inst.d_fg, inst.d_og)
        if f:
            assert is_spanning(inst.d_gg, inst.d_fg) and is_spanning(inst.d_fg, inst.d_og)
        zb = Grading.from_configuration(inst.b)
        for _ in range(3):
            p = homogeneous_polynomial(rng, inst.a, inst.b, inst.data)
            assert is_homogeneous(p, zb)
            assert is_simplex(polynomial_subcomplex(p, inst.d_fg, inst.data))


def test_face_predicate_matches_fourier_motzkin():
    rng = random.Random(61)
    checked = 0
    while checked < 10:
        inst = Instance(rng)
        fam = inst.data.family
        if len(fam) < 2:
            continue
        checked += 1
        for i, j in itertools.combinations(range(len(fam)), 2):
            gens = [[inst.data.projection.image(fam.rays[k]) for k in fam.minimal_nonfaces[e]] for e in (i, j)]
            assert inst.d_fg.is_face({i, j}) == fm_relint_meet(gens, inst.b.ambient_dim)


def test_cube_complexes(cube_data):
    cd = cube_data
    assert len(cd.d_gg.vertices) == 20
    assert {cd.to_published(f) for f in cd.d_gg.facets} == {frozenset({k, k + 1}) for k in range(1, 20, 2)}
    expected = {frozenset({k, k + 1}) for k in range(1, 12, 2)} | {frozenset(range(13, 21))}
    assert {cd.to_published(f) for f in cd.d_fg.facets} == expected
    assert is_spanning(cd.d_gg, cd.d_fg)
    full = build_complex(zero_projection(cd.config), cd.data.family, cd.data.labels)
    assert full.facets == (frozenset(range(20)),)
    g, order = skeleton_complement(cd.d_gg)
    assert len(g.edges) == 190 - 10


def test_cube_polynomial_subcomplexes(cube_data):
    cd = cube_data
    p = Polynomial.parse("x14*x23 - x12*x34", cube.LABELS)
    assert cd.to_published(polynomial_subcomplex(p, cd.d_gg, cd.data).vertices) == {1, 2}
    seventh = cube.radical_generators()[6]
    sub = polynomial_subcomplex(seventh, cd.d_fg, cd.data)
    assert cd.to_published(sub.vertices) == set(range(13, 21))
    assert is_simplex(sub)
    assert not is_simplex(polynomial_subcomplex(seventh, cd.d_gg, cd.data))
    x12 = Polynomial.parse("x12", cube.LABELS)
    assert polynomial_subcomplex(x12, cd.d_fg, cd.data).vertices == frozenset()


def test_cube_cover_conditions(cube_data):
    cd = cube_data
    za, zb = cd.data.grading_g, cd.data.grading_f
    rep = verify_cover_conditions(cube.circuit_generators(), za, cd.d_gg, cd.data)
    assert rep.ok and all(v.simplex for v in rep.verdicts)
    rep = verify_cover_conditions(cube.radical_generators(), zb, cd.d_fg, cd.data)
    assert rep.ok and all(v.homogeneous and v.simplex for v in rep.verdicts)
    rep = verify_cover_conditions(cube.circuit_generators()[:6], za, cd.d_gg, cd.data)
    assert not rep.ok
    assert cd.to_published(rep.uncovered) == set(range(13, 21))


def test_cube_invariants(cube_data):
    cd = cube_data
    g, _ = skeleton_complement(cd.d_gg)
    assert chromatic_number(g).number == 10
    g, _ = skeleton_complement(cd.d_fg)
    assert chromatic_number(g).number == 7
    d = delta_omega(cd.d_fg)
    assert d.value == 7
    assert {cd.to_published(p) for p in d.matching} == \
        {frozenset({k, k + 1}) for k in range(1, 12, 2)} | {frozenset(range(13, 21))}


def test_bound_report_identity_grading(cube_data):
    rep = bound_report(cube.configuration(), None, {"circuits": cube.circuit_generators()})
    assert (rep.gamma, rep.delta, rep.height) == (10, 10, 5)
    assert rep.upper_bound == 10 and rep.lower_bound == 10
    assert "pinned: ara_F = 10" in rep.conclusion
