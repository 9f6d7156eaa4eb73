"""Smoke tests for the compiled module.

Runs against the freshly built extension via PYTHONPATH (no install step);
the pure-python wrapper package is exercised separately when installed.
"""

import json
from fractions import Fraction

import pytest

import _sncstab as core


@pytest.fixture
def fixture_curve():
    return core.curve([2, 1], [(0, 1, 1)], {"L": [3, 2]})


def test_curve_shape(fixture_curve):
    cfg = fixture_curve
    assert cfg.dimension == 1
    assert cfg.components == ["Y1", "Y2"]
    assert cfg.bundles == ["L", "K"]
    assert cfg.canonical == "K"


def test_validate_and_roundtrip(fixture_curve):
    checks = core.validate(fixture_curve)
    assert all(ok for _, ok, _ in checks)
    text = fixture_curve.to_json()
    back = core.parse_config(text)
    assert back.to_json() == text


def test_exact_values(fixture_curve):
    assert Fraction(core.e_value(fixture_curve, "Y1", "L")) == Fraction(1, 2)
    assert Fraction(core.intersect(fixture_curve, ["L", "Y1"])) == 3
    assert Fraction(core.chi(fixture_curve, "Y1,Y2", "L")) == 3
    value, label = core.kx_criterion(fixture_curve, "Y1")
    assert Fraction(value) == -4
    assert label == "MinusTwistable"


def test_interval_and_enumeration(fixture_curve):
    rep = json.loads(core.twistable_interval(fixture_curve, "Y1", "L"))
    assert rep["kind"] == "UnitInterval"
    assert rep["s"] == "-1/4"
    assert rep["left_closed"] and rep["right_closed"]
    assert rep["candidates"] == ["-1"]

    twists = core.enumerate_twists(fixture_curve, "L")
    assert twists == [[0, 1]]
    assert core.brute_force_twists(fixture_curve, "L", window=10) == [[0, 1]]
    assert core.classify(fixture_curve, "L", [0, 1]) == "Stable"
    assert core.apply_twist(fixture_curve, "L", [0, 1]) == "Y2+L"


def test_semistability(fixture_curve):
    assert not core.is_semistable(fixture_curve, "L")
    assert core.is_semistable(fixture_curve, "L+Y2")


def test_preconditions_surface_and_errors():
    with pytest.raises(Exception):
        core.curve([2, -1], [(0, 1, 1)], {})
    tri = core.curve([2, 2, 2], [(0, 1, 1), (1, 2, 1), (0, 2, 1)], {"L": [1, 1, 1]})
    with pytest.raises(core.PreconditionError):
        core.enumerate_twists(tri, "L")

    surf = core.synth(2, 2, [(0, 1)], seed=42)
    assert surf.dimension == 2
    assert all(ok for _, ok, _ in core.validate(surf))
    rep = json.loads(core.twistable_interval(surf, "Y1", "L", mode="plus"))
    assert rep["kind"] in ("UnitInterval", "Degenerate")
