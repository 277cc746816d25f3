import itertools
import random

import pytest

from multigrade import cube
from multigrade.cones import configuration_rays, minimal_nonfaces
from multigrade.configurations import (Graph, circuits, cone_of_monomial, graph_circuits, graph_configuration,
                                       height, monomial_degree)
from multigrade.linalg import Lattice, VectorConfiguration
from oracles import rational_rank


def mono(*names):
    u = [0] * 12
    for n in names:
        u[cube.LABELS.index(n)] += 1
    return u


def test_graph_configuration():
    assert graph_configuration(Graph(2, ((1, 2),))).columns == ((1, 1),)
    square = graph_configuration(Graph.from_edges([(1, 2), (2, 3), (3, 4), (1, 4)]))
    assert square.ambient_dim == 4 and square.n == 4
    cfg = cube.configuration()
    assert cfg.labels == ("12", "14", "15", "23", "26", "34", "37", "48", "56", "58", "67", "78")
    assert cfg.columns[0] == (1, 1, 0, 0, 0, 0, 0, 0)
    with pytest.raises(ValueError):
        Graph(3, ((1, 1),))


def test_circuit_examples():
    tree = graph_configuration(Graph.from_edges([(1, 2), (2, 3), (2, 4)]))
    assert circuits(tree) == []
    square = Graph.from_edges([(1, 2), (2, 3), (3, 4), (1, 4)])
    cs = circuits(graph_configuration(square))
    assert len(cs) == 1 and sorted(map(abs, cs[0].vector)) == [1, 1, 1, 1]
    assert graph_circuits(square) == cs
    path = Graph.from_edges([(1, 2), (2, 3)])
    assert graph_circuits(path) == []


def test_cube_circuits_are_the_published_list():
    cfg = cube.configuration()
    cs = circuits(cfg)
    published = set()
    for p in cube.polynomials(cube.CIRCUITS):
        (a, _), (b, _) = p.terms
        v = tuple(x - y for x, y in zip(a, b))
        first = next(x for x in v if x)
        published.add(v if first > 0 else tuple(-x for x in v))
    assert {c.vector for c in cs} == published
    assert set(graph_circuits(cube.graph())) == set(cs)


def random_bipartite(rng):
    left = rng.randint(1, 4)
    right = rng.randint(1, 4)
    pairs = [(i, left + j) for i in range(1, left + 1) for j in range(1, right + 1)]
    k = rng.randint(1, min(12, len(pairs)))
    return Graph.from_edges(rng.sample(pairs, k), left + right)


def test_circuits_agree_with_cycles_on_random_bipartite_graphs():
    rng = random.Random(17)
    for _ in range(40):
        g = random_bipartite(rng)
        cfg = graph_configuration(g)
        cs = circuits(cfg)
        assert set(cs) == set(graph_circuits(g))
        for c in cs:
            assert all(x in (-1, 0, 1) for x in c.vector)
            assert monomial_degree(c.plus, cfg) == monomial_degree(c.minus, cfg)
        # bipartite: the kernel has rank |E| - |V| + components
        assert height(cfg.kernel()) == len(g.edges) - g.vertices + g.components()


def test_circuits_are_minimal_supports():
    rng = random.Random(8)
    for _ in range(20):
        m, n = rng.randint(1, 3), rng.randint(2, 6)
        cols = tuple(tuple(rng.randint(-2, 2) for _ in range(m)) for _ in range(n))
        cfg = VectorConfiguration(m, cols)
        cs = circuits(cfg)
        supports = {c.support for c in cs}
        for c in cs:
            assert cfg.degree(c.vector) == (0,) * m
        # every subset of columns that is minimally dependent is a circuit support
        for k in range(1, n + 1):
            for S in itertools.combinations(range(n), k):
                sub = [cols[i] for i in S]
                dependent = rational_rank(sub) < k
                minimal = all(rational_rank([cols[i] for i in S if i != j]) == k - 1 for j in S)
                assert (S in supports) == (dependent and minimal)


def test_height():
    assert height(Lattice.zero(3)) == 0
    assert height(cube.configuration().kernel()) == 5
    assert height(Lattice.from_generators([[2, -2]], 2)) == 1


def test_monomial_degree():
    assert monomial_degree([0, 1, 0], VectorConfiguration(1, ((1,), (2,), (3,)))) == (2,)
    assert monomial_degree(mono("14", "23"), cube.configuration()) == (1, 1, 1, 1, 0, 0, 0, 0)
    assert monomial_degree(mono("14", "23"), cube.b_configuration()) == (7, 1, 7, 8)


@pytest.fixture(scope="module")
def cube_family():
    cfg = cube.configuration()
    return cfg, minimal_nonfaces(configuration_rays(cfg).rays)


def labels_of(cfg, family, i):
    return {cfg.labels[j] for j in family.minimal_nonfaces[i]}


def test_cone_of_monomial_cube(cube_family):
    cfg, fam = cube_family
    for method in ("fast", "definition"):
        i = cone_of_monomial(mono("14", "23"), cfg, fam, method)
        assert labels_of(cfg, fam, i) == {"14", "23"}
        assert cone_of_monomial(mono("12"), cfg, fam, method) is None
        i = cone_of_monomial(mono("23", "48", "56"), cfg, fam, method)
        assert labels_of(cfg, fam, i) == {"23", "48", "56"}


def test_cone_of_monomial_fast_matches_definition_on_cube(cube_family):
    cfg, fam = cube_family
    rng = random.Random(4)
    for _ in range(60):
        names = rng.sample(cube.LABELS, rng.randint(1, 4))
        u = mono(*names)
        assert cone_of_monomial(u, cfg, fam, "fast") == cone_of_monomial(u, cfg, fam, "definition")


def test_cone_of_monomial_fast_matches_definition_random():
    rng = random.Random(12)
    for _ in range(30):
        dim = rng.randint(2, 3)
        cols = tuple({(rng.randint(1, 3),) + tuple(rng.randint(-2, 2) for _ in range(dim - 1))
                      for _ in range(rng.randint(3, 6))})
        cfg = VectorConfiguration(dim, cols)
        fam = minimal_nonfaces(configuration_rays(cfg).rays)
        for _ in range(5):
            u = [rng.choice([0, 0, 1, 2]) for _ in cols]
            assert cone_of_monomial(u, cfg, fam, "fast") == cone_of_monomial(u, cfg, fam, "definition")
