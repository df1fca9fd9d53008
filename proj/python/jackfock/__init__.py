"""Exact Jack, Laughlin and Halperin eigenstates.

Coefficients are returned as exact strings (rationals as "p/q", polynomials in
b, u, v, r in ascending order). Pass ``beta`` as an int, str or Fraction to
specialize b^2.
"""

import json
from fractions import Fraction

from ._jackfock import (
    ResonanceError,
    dominance,
    energy,
    hd_energy,
    partitions,
)
from . import _jackfock

__all__ = [
    "ResonanceError",
    "dominance",
    "eigenstate",
    "energy",
    "halperin",
    "hd_energy",
    "latex",
    "maya",
    "partitions",
    "verify",
]


def _beta(beta):
    if beta is None:
        return None
    return str(Fraction(beta))


def eigenstate(model, lam, basis="schur", beta=None, normalize="monic"):
    return json.loads(_jackfock.eigenstate_json(model, list(lam), basis, _beta(beta), normalize))


def latex(model, lam, basis="powersum", beta=None, normalize="monic"):
    return _jackfock.latex(model, list(lam), basis, _beta(beta), normalize)


def halperin(lam, mu, N1=0):
    return json.loads(_jackfock.halperin_json(list(lam), list(mu), N1))


def maya(lam):
    return json.loads(_jackfock.maya_json(list(lam)))


def verify(suite="all", max_weight=6):
    return _jackfock.verify(suite, max_weight)
