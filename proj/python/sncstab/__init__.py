"""Semistability of line bundles on simple-normal-crossings degeneration fibers.

Thin convenience layer over the compiled core. Exact values are returned as
`fractions.Fraction`, structured reports as plain dicts.
"""

import json
from fractions import Fraction

from _sncstab import (  # noqa: F401
    Configuration,
    PreconditionError,
    apply_twist,
    brute_force_twists,
    classify,
    curve,
    enumerate_twists,
    load_config,
    parse_config,
    synth,
    validate,
)
import _sncstab


def e_value(config, subset, bundle):
    """Exact defect of a union of components, as a Fraction."""
    return Fraction(_sncstab.e_value(config, subset, bundle))


def e_poly(config, subset, bundle, polarization="", twist_subset=""):
    """Defect polynomial as {(m_degree, b_degree): Fraction}."""
    terms = json.loads(_sncstab.e_poly(config, subset, bundle, polarization, twist_subset))
    return {(t["m"], t["b"]): Fraction(t["coeff"]) for t in terms}


def is_semistable(config, bundle, polarization="", mode="minus", scope="pairs"):
    return _sncstab.is_semistable(config, bundle, polarization, mode, scope)


def twistable_interval(config, subset, bundle, polarization="", mode="minus"):
    """Interval report as a dict; integer candidates become ints."""
    rep = json.loads(_sncstab.twistable_interval(config, subset, bundle, polarization, mode))
    if rep["kind"] == "UnitInterval":
        rep["candidates"] = [int(c) for c in rep["candidates"]]
    return rep


def kx_criterion(config, subset):
    value, label = _sncstab.kx_criterion(config, subset)
    return Fraction(value), label


def intersect(config, classes):
    return Fraction(_sncstab.intersect(config, classes))


def chi(config, subset, bundle=""):
    return Fraction(_sncstab.chi(config, subset, bundle))
