"""Python access to the exact verification suites."""

import json
from fractions import Fraction

from . import _assoc

suite_names = _assoc.suite_names
jet_factor = _assoc.jet_factor
associativity_form = _assoc.associativity_form


def run(selector="all", *, q_order=64, series_order=8, tol=1e-9, trials=100, seed=0, timings=True):
    """Run a suite and return the parsed JSON report."""
    return json.loads(_assoc.run_json(selector, q_order, series_order, tol, trials, seed, timings))


def eisenstein(k, order):
    return [Fraction(c) for c in _assoc.eisenstein(k, order)]


def discriminant(order):
    return [Fraction(c) for c in _assoc.discriminant(order)]


def qybe_holds(a, b, c, d):
    return _assoc.qybe_holds(*(str(Fraction(x)) for x in (a, b, c, d)))
