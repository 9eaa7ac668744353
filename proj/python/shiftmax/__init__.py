"""Ergodic optimization for the binary shift.

Thin Python layer over the native core. Rationals are returned as
fractions.Fraction; structured results come back as dicts.
"""

import json
from fractions import Fraction

from . import _core
from ._core import ShiftmaxError

__all__ = [
    "ShiftmaxError",
    "forward_transform",
    "inverse_transform",
    "truncate",
    "variation",
    "cycles",
    "hamiltonian_count",
    "recursive_complexity",
    "frequencies",
    "polytope_dimension",
    "polytope_edges",
    "face_census",
    "ergodic_supremum",
    "karp_max_cycle_mean",
    "check_gap_criterion",
    "check_gauge",
    "run_experiment",
    "beta_projection_decomposition_check",
]


def _q(x):
    return f"{x.numerator}/{x.denominator}" if isinstance(x, Fraction) else str(x)


def _level(values):
    level = max(len(values).bit_length() - 1, 0)
    if 1 << level != len(values):
        raise ValueError("a step function needs 2^n values")
    return level


def _fractions(items):
    return [Fraction(s) for s in items]


def _step_json(values):
    return json.dumps({"level": _level(values), "values": [_q(v) for v in values]})


def forward_transform(values):
    """Returns (mean, {word: c_w}) for the step function with these cylinder values."""
    h = json.loads(_core.forward_transform(_level(values), [_q(v) for v in values]))
    return Fraction(h["mean"]), {w: Fraction(c) for w, c in h["coeffs"].items()}


def inverse_transform(mean, coeffs, level):
    payload = {"level": level, "mean": _q(mean), "coeffs": {w: _q(c) for w, c in coeffs.items()}}
    return _fractions(_core.inverse_transform(json.dumps(payload)))


def truncate(values, n):
    return _fractions(_core.truncate(_level(values), [_q(v) for v in values], n))


def variation(values, n):
    return Fraction(_core.variation(_level(values), [_q(v) for v in values], n))


def cycles(n):
    return _core.cycles(n)


def hamiltonian_count(n):
    return _core.hamiltonian_count(n)


def recursive_complexity(word):
    return _core.recursive_complexity(word)


def frequencies(word, k):
    return _fractions(_core.frequencies(word, k))


def polytope_dimension(n):
    return _core.polytope_dimension(n)


def polytope_edges(n):
    return _core.polytope_edges(n)


def face_census(n):
    by_dimension, facet_sizes, total = _core.face_census(n)
    return {"by_dimension": list(by_dimension), "facet_sizes": dict(facet_sizes), "total": total}


def _decode(d):
    for key in ("ergsup", "second_best", "gap", "tail", "margin"):
        if key in d:
            d[key] = Fraction(d[key])
    return d


def ergodic_supremum(values):
    return _decode(json.loads(_core.ergodic_supremum(_level(values), [_q(v) for v in values])))


def karp_max_cycle_mean(n, weights):
    return Fraction(_core.karp_max_cycle_mean(n, [_q(w) for w in weights]))


def check_gap_criterion(values, n, tail=None):
    """tail: None (exact function), {"bounds": [...], "continuation_ratio": ...}
    or {"sequence": ..., "gauge": ..., "lip": ...}."""
    tail_json = "" if tail is None else json.dumps(tail, default=_q)
    return _decode(json.loads(_core.check_gap_criterion(_step_json(values), tail_json, n)))


def check_gauge(sequence="default", gauge="2^-n*a_n", horizon=5):
    evanescent, admissible = _core.check_gauge(json.dumps(sequence), json.dumps(gauge), horizon)
    return {"evanescent": evanescent, "admissible": admissible}


def run_experiment(config, threads=0):
    return json.loads(_core.run_experiment(json.dumps(config), threads))


def beta_projection_decomposition_check():
    return _core.beta_projection_decomposition_check()
