"""Exact spectral and tiling checks for finite unions of intervals.

Intervals are written "left,length;left,length" and periodic spectra
"d=2;0,1/2". Every call returns plain Python data decoded from the JSON the
command line tool prints.
"""

import json

from . import _core
from ._core import (
    InvalidGeometry,
    InvalidSpectrum,
    InvariantViolation,
    ParseError,
    SpectileError,
    cyclotomic_poly,
)

__all__ = [
    "verify",
    "tiles",
    "classify2",
    "classify3",
    "gv",
    "torus",
    "search",
    "cyclotomic_poly",
    "SpectileError",
    "ParseError",
    "InvalidGeometry",
    "InvalidSpectrum",
    "InvariantViolation",
]


def verify(omega, spectrum):
    return json.loads(_core.verify(omega, spectrum))


def tiles(omega, p_max=None):
    return json.loads(_core.tiles(omega, p_max))


def classify2(omega, spectrum):
    return json.loads(_core.classify2(omega, spectrum))


def classify3(omega, spectrum):
    return json.loads(_core.classify3(omega, spectrum))


def gv(exponents):
    return json.loads(_core.gv(exponents))


def torus(system, order, jobs=1):
    return json.loads(_core.torus(system, order, jobs))


def search(d_max=6, grid=0, jobs=1):
    """One dict per configuration plus a summary dict per d."""
    return json.loads(_core.search(d_max, grid, jobs))
