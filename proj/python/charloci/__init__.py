"""Python access to the charloci C++ core."""

import json

from ._core import Complex, Error, ObjectFile, Torus, ell, is_m_perverse
from . import _core

__all__ = [
    "Complex",
    "Error",
    "ObjectFile",
    "Torus",
    "ell",
    "is_m_perverse",
    "load_objects",
    "jump_locus",
    "oracle_check",
    "perversity_report",
    "ic_report",
]


def load_objects(path):
    with open(path) as f:
        return ObjectFile.from_json(f.read())


def jump_locus(complex, k, m, torus):
    return json.loads(_core.jump_locus(complex, k, m, torus))


def oracle_check(complex, k, m, torus, samples=50, seed=0):
    return json.loads(_core.oracle_check(complex, k, m, torus, samples, seed))


def perversity_report(complex, torus=None):
    return json.loads(_core.perversity_report(complex, torus))


def ic_report(path, ell=None):
    with open(path) as f:
        return json.loads(_core.ic_report(f.read(), ell))
