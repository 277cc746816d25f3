import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from multigrade import cube  # noqa: E402
from multigrade.complexes import build_complex, prepare  # noqa: E402
from multigrade.cones import identity_projection  # noqa: E402

settings.register_profile("repo", deadline=None, derandomize=True)
settings.load_profile("repo")

# E_1..E_20 of the cube example, as sets of edge labels, in the published order.
PUBLISHED_E = [
    {"14", "23"}, {"12", "34"}, {"12", "56"}, {"15", "26"}, {"26", "37"},
    {"23", "67"}, {"14", "58"}, {"15", "48"}, {"37", "48"}, {"34", "78"},
    {"58", "67"}, {"56", "78"}, {"23", "48", "56"}, {"26", "34", "58"},
    {"14", "37", "56"}, {"15", "34", "67"}, {"12", "37", "58"}, {"15", "23", "78"},
    {"12", "48", "67"}, {"14", "26", "78"},
]

ACCEPTANCE_LINES: list[str] = []


class CubeData:
    def __init__(self):
        self.config = cube.configuration()
        self.b = cube.b_configuration()
        self.data = prepare(self.config, self.b)
        self.d_gg = build_complex(identity_projection(self.config), self.data.family, self.data.labels)
        self.d_fg = build_complex(self.data.projection, self.data.family, self.data.labels)
        # our vertex index -> published E number (1-based)
        self.published_index = {}
        for i, E in enumerate(self.data.family.minimal_nonfaces):
            names = {self.config.label(self.data.rays.columns[j]) for j in E}
            self.published_index[i] = PUBLISHED_E.index(names) + 1
        self.ours = {e: i for i, e in self.published_index.items()}

    def to_published(self, face):
        return frozenset(self.published_index[v] for v in face)

    def from_published(self, numbers):
        return frozenset(self.ours[e] for e in numbers)


@pytest.fixture(scope="session")
def cube_data():
    return CubeData()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
