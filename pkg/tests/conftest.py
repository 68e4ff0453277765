"""Shared helpers: fixture loading and cached expensive drawings."""

import pathlib

import pytest

from lombardi.graph import PlanarGraph, parse

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def load_text(name: str) -> str:
    return (FIXTURES / f"{name}.txt").read_text()


def load_graph(name: str) -> PlanarGraph:
    return parse(load_text(name))


_drawings: dict = {}
_timings: dict = {}


def drawn(name: str):
    """Draw a fixture with draw_subcubic once per session; returns
    (graph, drawing, wall seconds)."""
    if name not in _drawings:
        import time

        from lombardi.drawing import draw_subcubic

        g = load_graph(name)
        t0 = time.perf_counter()
        d = draw_subcubic(g)
        _timings[name] = time.perf_counter() - t0
        _drawings[name] = (g, d)
    g, d = _drawings[name]
    return g, d, _timings[name]


@pytest.fixture
def fixtures_dir() -> pathlib.Path:
    return FIXTURES
