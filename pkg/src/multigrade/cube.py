"""The cube-graph example: graph, the coarser configuration B, circuits and
the seven polynomials claimed to generate rad(I) up to radical."""
from __future__ import annotations

from .configurations import Graph, graph_configuration
from .grading import Polynomial
from .linalg import VectorConfiguration

EDGES = ((1, 2), (1, 4), (1, 5), (2, 3), (2, 6), (3, 4), (3, 7), (4, 8),
         (5, 6), (5, 8), (6, 7), (7, 8))

LABELS = tuple(f"{i}{j}" for i, j in EDGES)

B_COLUMNS = {
    "12": (5, 0, 3, 4), "14": (3, 1, 5, 5), "15": (4, 1, 4, 8), "23": (4, 0, 2, 3),
    "26": (5, 0, 1, 6), "34": (2, 1, 4, 4), "37": (2, 1, 2, 6), "48": (1, 2, 5, 8),
    "56": (4, 1, 2, 10), "58": (2, 2, 4, 11), "67": (3, 1, 1, 9), "78": (1, 2, 3, 10),
}

CIRCUITS = (
    "x14*x23 - x12*x34", "x12*x56 - x15*x26", "x26*x37 - x23*x67", "x14*x58 - x15*x48",
    "x37*x48 - x34*x78", "x58*x67 - x56*x78",
    "x23*x48*x56 - x26*x34*x58", "x14*x37*x56 - x15*x34*x67",
    "x12*x37*x58 - x15*x23*x78", "x12*x48*x67 - x14*x26*x78",
    "x23*x56*x78 - x26*x37*x58", "x14*x56*x78 - x15*x48*x67",
    "x26*x34*x78 - x23*x48*x67", "x15*x34*x78 - x14*x37*x58",
    "x15*x26*x78 - x12*x58*x67", "x14*x23*x78 - x12*x37*x48",
    "x34*x58*x67 - x37*x48*x56", "x12*x34*x67 - x14*x26*x37",
    "x15*x23*x67 - x12*x37*x56", "x12*x34*x58 - x15*x23*x48",
    "x14*x26*x58 - x12*x48*x56", "x14*x23*x56 - x15*x26*x34",
    "x12*x34*x56*x78 - x15*x23*x48*x67", "x12*x34*x56*x78 - x14*x26*x37*x58",
    "x14*x23*x56*x78 - x15*x26*x37*x48", "x12*x34*x58*x67 - x15*x26*x37*x48",
    "x14*x23*x58*x67 - x12*x37*x48*x56", "x14*x23*x58*x67 - x15*x26*x34*x78",
)

RADICAL_GENERATORS = CIRCUITS[:6] + (
    "(x23*x48*x56 - x26*x34*x58) + (x14*x37*x56 - x15*x34*x67)"
    " + (x12*x37*x58 - x15*x23*x78) + (x12*x48*x67 - x14*x26*x78)",
)


def graph() -> Graph:
    return Graph(8, EDGES)


def configuration() -> VectorConfiguration:
    return graph_configuration(graph())


def b_configuration() -> VectorConfiguration:
    cols = tuple(B_COLUMNS[label] for label in LABELS)
    return VectorConfiguration(4, cols, LABELS)


def polynomials(texts) -> list[Polynomial]:
    return [Polynomial.parse(t, LABELS) for t in texts]


def circuit_generators() -> list[Polynomial]:
    """The first ten circuits, a minimal generating set of the toric ideal."""
    return polynomials(CIRCUITS[:10])


def radical_generators() -> list[Polynomial]:
    return polynomials(RADICAL_GENERATORS)
