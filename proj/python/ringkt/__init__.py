"""K-theory of ring C*-algebras of rings of integers."""

import json
import os

from . import _core
from ._core import RingktError, catalog_names, check_doublecoset

FIELDS_DIR = _core.FIELDS_DIR


def _resolve(spec):
    spec = os.fspath(spec)
    if os.path.exists(spec):
        return spec
    for cand in (os.path.join(FIELDS_DIR, spec), os.path.join(FIELDS_DIR, spec + ".toml")):
        if os.path.exists(cand):
            return cand
    return spec


def analyze(spec):
    return json.loads(_core.analyze_json(_resolve(spec)))


def eta(spec, c):
    return json.loads(_core.eta_json(_resolve(spec), c))


def is_admissible(spec, c):
    return _core.is_admissible(_resolve(spec), c)


def ktheory(spec, c=None, truncate=2, target="ring-cstar"):
    path = _resolve(spec)
    if target == "group-cstar":
        return json.loads(_core.ktheory_json(path, 0, truncate, True))
    if c is None:
        c = next(k for k in range(2, 10**6) if _core.is_admissible(path, k))
    return json.loads(_core.ktheory_json(path, c, truncate, False))


def limit(rows, parameter=None, invert_all_primes=False):
    return json.loads(_core.limit_json(rows, parameter, invert_all_primes))
