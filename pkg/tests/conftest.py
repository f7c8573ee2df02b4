import random
import sys
from fractions import Fraction
from itertools import product
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from invsys.points import PointConfiguration, normalize  # noqa: E402
from invsys.polyring import GradedPoly  # noqa: E402

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

FOUR_POINTS = [[0, 0, 1], [1, 1, 1], [1, 0, 1], [0, 1, 1]]
COLLINEAR_PLUS_ONE = [[1, 0, 1], [0, 0, 1], [-1, 0, 1], [0, 1, 1]]
COORDINATE_POINTS = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
PM_GRID = [[1, 1, 1], [1, -1, 1], [-1, 1, 1], [-1, -1, 1]]


def grid(*axes):
    """Affine grid axes[0] x axes[1] x ... placed at last coordinate 1: a complete intersection."""
    return [list(p) + [1] for p in product(*axes)]


# (label, points, ell) -- every configuration is a complete intersection, hence
# arithmetically Gorenstein, and ell is nonzero at every point.
GORENSTEIN_CASES = [
    ("P1 two points", [[1, 0], [0, 1]], [1, 1]),
    ("P1 three points", grid([0, 1, 2]), [0, 1]),
    ("P1 four points", grid([-1, 0, 1, 3]), [1, 2]),
    ("P1 five points", grid([-2, -1, 0, 1, 2]), [1, 5]),
    ("P2 four points", grid([0, 1], [0, 1]), [0, 0, 1]),
    ("P2 pm grid", grid([1, -1], [1, -1]), [0, 0, 1]),
    ("P2 pm grid tilted ell", grid([1, -1], [1, -1]), [1, 1, 3]),
    ("P2 2x3 grid", grid([0, 1], [-1, 0, 1]), [0, 0, 1]),
    ("P2 3x3 grid", grid([-1, 0, 1], [-1, 0, 2]), [1, 0, 2]),
    ("P2 2x4 grid", grid([0, Fraction(1, 2)], [0, 1, 2, 3]), [1, 1, 1]),
    ("P3 pm cube", grid([1, -1], [1, -1], [1, -1]), [0, 0, 0, 1]),
    ("P3 01 cube", grid([0, 1], [0, 1], [0, 1]), [1, 1, 0, 2]),
    ("P3 2x2x3 box", grid([0, 1], [0, 1], [0, 1, 2]), [0, 0, 0, 1]),
]

CASE_IDS = [c[0] for c in GORENSTEIN_CASES]


def config(points):
    return PointConfiguration.from_coords(points)


def ell_form(coeffs):
    return GradedPoly.linear("R", coeffs)


def random_configuration(rng: random.Random, n_max=3, m_max=8, coord=3):
    n = rng.randint(1, n_max)
    m = rng.randint(1, m_max)
    seen = {}
    attempts = 0
    while len(seen) < m and attempts < 200:
        attempts += 1
        p = [rng.randint(-coord, coord) for _ in range(n + 1)]
        if not any(p):
            continue
        seen.setdefault(normalize(p), p)
    return PointConfiguration.from_coords(list(seen.values()), n=n)


# acceptance reporting: tests marked ``acceptance(number, text)`` get one
# PASS/FAIL line each in the terminal summary
_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None or rep.when != "call":
        return
    key = mark.args[0]
    prev = _ACCEPTANCE.get(key, (mark.args[1], True))
    _ACCEPTANCE[key] = (mark.args[1], prev[1] and rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_ACCEPTANCE):
        text, ok = _ACCEPTANCE[key]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {key}: {text}")
