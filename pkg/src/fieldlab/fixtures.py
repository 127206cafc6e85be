"""Bundled example objects, loadable by name without touching the network."""
from __future__ import annotations

import json
from importlib import resources

from .designs import BlockDesign, parse_design_json
from .errors import FixtureError


def _read(filename):
    return json.loads(resources.files("fieldlab").joinpath("data", filename).read_text())


def nine_point_classes() -> list[list[tuple[int, ...]]]:
    """The four parallel classes as printed alongside the nine-point design."""
    return [[tuple(b) for b in cls] for cls in _read("nine-point-design.json")["classes"]]


def load_fixture(name: str):
    """``nine-point-design`` -> BlockDesign; ``rep3-transmission`` -> list of
    received words; ``fano`` -> the projective plane over F_2."""
    if name == "nine-point-design":
        data = _read("nine-point-design.json")
        return parse_design_json(data, data["t"])
    if name == "rep3-transmission":
        return list(_read("rep3-transmission.json")["received"])
    if name == "fano":
        from .fingeo import projective_plane
        from .gfield import make_field
        return projective_plane(make_field(2))
    raise FixtureError(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}")


FIXTURES = ("nine-point-design", "rep3-transmission", "fano")
