"""Exact computations for finitely presented groups.

Rationals come back from the extension as "n/d" strings; the wrappers here
turn them into fractions.Fraction.
"""

import json
from fractions import Fraction

try:
    from . import _grpcalc
except ImportError:  # in-tree build: the extension sits next to the package
    import _grpcalc

CapExceeded = _grpcalc.CapExceeded
Error = _grpcalc.Error
InputError = _grpcalc.InputError
parse = _grpcalc.parse
pgroup = _grpcalc.pgroup
uncertainty = _grpcalc.uncertainty

__all__ = [
    "CapExceeded",
    "Error",
    "InputError",
    "approximants",
    "free_product_bound",
    "girth_finite",
    "parse",
    "pgroup",
    "relator_length_bound",
    "run",
    "run_json",
    "torsion_bound",
    "trivial_bound",
    "uncertainty",
]


def run(*args):
    """Run a grpcalc subcommand; returns (exit code, stdout, stderr)."""
    return _grpcalc.run([str(a) for a in args])


def run_json(*args):
    """Run a subcommand and decode its JSON report; returns (exit code, report)."""
    code, out, _ = run(*args)
    return code, json.loads(out)


def approximants(text, p=2, depth=3, max_index=100_000):
    """[(index, dim H^1, normalized Fraction)] along the derived p-series."""
    return [(n, h1, Fraction(q)) for n, h1, q in _grpcalc.approximants(text, p, depth, max_index)]


def trivial_bound(k):
    return Fraction(_grpcalc.trivial_bound(k))


def torsion_bound(orders):
    """orders: integers, with None or "inf" for infinite order."""
    return Fraction(_grpcalc.torsion_bound(list(orders)))


def free_product_bound(summands, relator_orders=()):
    """summands: [(beta, order)], beta a Fraction or string, order an int or None."""
    return Fraction(_grpcalc.free_product_bound([(str(b), o) for b, o in summands], list(relator_orders)))


def relator_length_bound(text):
    return Fraction(_grpcalc.relator_length_bound(text))


def girth_finite(text):
    return _grpcalc.girth_finite(text)
