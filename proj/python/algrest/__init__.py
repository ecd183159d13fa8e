"""Algebraic restrictions of differential forms to zero-dimensional complete
intersections, and their symplectic invariants.

Thin wrapper over the C++ extension: every operation returns a plain dict.
"""

import json as _json

from . import _core

DomainError = _core.DomainError


def qh_check(vars, ideal):
    """Weights and quasi-degrees making the generators quasi-homogeneous."""
    return _json.loads(_core.qh_check(list(vars), ideal))


def restrict_basis(vars, ideal, p=2, closed=False, trunc_cap=24):
    """Basis and dimension of p-forms modulo zero algebraic restrictions."""
    return _json.loads(_core.restrict_basis(list(vars), ideal, p, closed, trunc_cap))


def reduce(vars, ideal, form, trunc_cap=24):
    """Coordinates of the algebraic restriction of a form."""
    return _json.loads(_core.reduce(list(vars), ideal, form, trunc_cap))


def primitive(vars, ideal, form, trunc_cap=24):
    """A primitive alpha with d(alpha) equal to the given closed form."""
    return _json.loads(_core.primitive(list(vars), ideal, form, trunc_cap))


def invariants(ideal, n, vars=(), form="", trunc_cap=24):
    """Symplectic multiplicity, index of isotropy, and realizability."""
    return _json.loads(_core.invariants(list(vars), ideal, form, n, trunc_cap))


def classify(ideal, n, family="", vars=(), form="", trunc_cap=24):
    """Symplectic class of a catalog ideal under the (default) standard form."""
    return _json.loads(_core.classify(family, list(vars), ideal, form, n, trunc_cap))


def table(family, n, a=0, b=0, trunc_cap=24):
    """All symplectic classes of a family block."""
    return _json.loads(_core.table(family, a, b, n, trunc_cap))


__all__ = [
    "DomainError",
    "qh_check",
    "restrict_basis",
    "reduce",
    "primitive",
    "invariants",
    "classify",
    "table",
]
