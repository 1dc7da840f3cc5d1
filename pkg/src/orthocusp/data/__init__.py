"""Bundled POLY3 fixtures."""

from __future__ import annotations

from importlib import resources

from ..core import Polyhedron3, parse_poly3

FIXTURES = ("tetrahedron", "cube", "square_pyramid", "triangular_prism",
            "dodecahedron")


def fixture_text(name: str) -> str:
    path = resources.files(__package__) / f"{name}.poly3"
    return path.read_text(encoding="utf-8")


def load_fixture(name: str) -> Polyhedron3:
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; available: {', '.join(FIXTURES)}")
    return parse_poly3(fixture_text(name))
