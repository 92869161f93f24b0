import pytest

from ringelsurf import build, ringel

ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, detail in sorted(ACCEPTANCE):
        line = f"criterion {number} {'PASS' if ok else 'FAIL'}: {title}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)


TETRA = [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]

# 6-vertex real projective plane
RP2_6 = [[1, 2, 3], [1, 2, 4], [1, 3, 5], [1, 4, 6], [1, 5, 6],
         [2, 3, 6], [2, 4, 5], [2, 5, 6], [3, 4, 5], [3, 4, 6]]

OCTAHEDRON = [[0, 2, 4], [0, 2, 5], [0, 3, 4], [0, 3, 5],
              [1, 2, 4], [1, 2, 5], [1, 3, 4], [1, 3, 5]]


@pytest.fixture
def tetra():
    return build(TETRA, name="tetrahedron")


@pytest.fixture
def rp2():
    return build(RP2_6, name="RP2_6")


@pytest.fixture
def octahedron():
    return build(OCTAHEDRON, name="octahedron")


@pytest.fixture
def moebius_torus():
    return ringel(0, 7)


def ringel_params(kmax=4):
    return [(k, n) for k in range(kmax + 1) for n in range(7 + 12 * k, 7 + 12 * k + 13)]
