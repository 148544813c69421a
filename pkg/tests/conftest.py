from __future__ import annotations

import dataclasses
from fractions import Fraction as F

import pytest

from wooddesargues import ConfigurationSeed, build_configuration, derive_figures
from wooddesargues.kernel import Point


REFERENCE_SEED = ConfigurationSeed(F(0), F(1), F(-1), F(2), F(3), F(-3, 2))

# one line per acceptance criterion, echoed after the test summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def reference_config():
    return build_configuration(REFERENCE_SEED)


@pytest.fixture(scope="session")
def reference_derived(reference_config):
    return derive_figures(reference_config)


def mutate_configuration(config, kind: str, label: str, axis: str, delta):
    """Return a copy of ``config`` with a single coordinate nudged by ``delta``."""
    delta = F(delta)

    def bump(p: Point) -> Point:
        return Point(p.x + delta, p.y) if axis == "x" else Point(p.x, p.y + delta)

    points = dict(config.points)
    centers = dict(config.centers)
    j = config.j
    if kind == "point":
        points[label] = bump(points[label])
    elif kind == "center":
        centers[label] = bump(centers[label])
    elif kind == "j":
        j = bump(j)
    else:
        raise ValueError(kind)
    return dataclasses.replace(config, points=points, centers=centers, j=j)
