import random
import sys
from pathlib import Path

import pytest
from hypothesis import settings

from gsplines import EdgeLabeledGraph, Ring, io

settings.register_profile("default", deadline=None, derandomize=True)
settings.load_profile("default")

DATA = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture
def data_dir():
    return DATA


def load(name):
    return io.load_graph(DATA / name)


def to_graph(ring, vertices, edges):
    """Build a library graph from oracle-style ``{(a, b): d}`` data."""
    return EdgeLabeledGraph(ring, vertices, [(a, b, d) for (a, b), d in edges.items()])


def random_connected(rng: random.Random, n: int, labels, extra_p=0.4):
    """Random connected graph on ``n`` vertices: a random spanning tree plus extra edges."""
    vertices = [f"v{i}" for i in range(n)]
    edges = {}
    for i in range(1, n):
        j = rng.randrange(i)
        edges[(vertices[j], vertices[i])] = rng.choice(labels)
    for i in range(n):
        for j in range(i + 1, n):
            key = (vertices[i], vertices[j])
            if key not in edges and (key[1], key[0]) not in edges and rng.random() < extra_p:
                edges[key] = rng.choice(labels)
    return vertices, edges


Z = Ring.integers()
ZX = Ring.polynomials()


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(module.RESULTS):
        terminalreporter.write_line(module.RESULTS[n])
