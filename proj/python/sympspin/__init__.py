"""Exact symplectic spinor and curvature computations.

Spinors, forms and tensors are exchanged as the JSON documents used by the
``sympspin`` command-line tool, decoded here into plain Python objects.
"""

import json as _json

from . import _sympspin
from ._sympspin import (
    DegreeOverflow,
    DimensionMismatch,
    Error,
    InvalidArgument,
    ParseError,
    SingularMatrix,
    SymmetryViolation,
    curvature_space_dimension,
    known_suites,
    sample_rational_vector,
    symplectic_form,
    weyl_space_dimension,
)

__all__ = [
    "DegreeOverflow",
    "DimensionMismatch",
    "Error",
    "InvalidArgument",
    "ParseError",
    "SingularMatrix",
    "SymmetryViolation",
    "check_symmetries",
    "clifford_basis",
    "curvature_action",
    "curvature_space_dimension",
    "known_suites",
    "op_X",
    "op_Y",
    "project",
    "random_curvature",
    "random_form",
    "random_spinor",
    "replay",
    "ricci_of",
    "run_suite",
    "sample_rational_vector",
    "sigma_tilde_of",
    "symplectic_form",
    "weyl_of",
    "weyl_space_dimension",
]


def _enc(value):
    return value if isinstance(value, str) else _json.dumps(value)


def run_suite(l=2, max_degree=6, pad=6, trials=20, seed=42, suites=("all",)):
    """Runs the verification suites and returns the report as a dict."""
    return _json.loads(_sympspin.run_suite(l, max_degree, pad, trials, seed, list(suites)))


def replay(document):
    """Re-evaluates a counterexample or every counterexample of a report.

    Returns a list of (check, passed, detail) tuples.
    """
    return _sympspin.replay(_enc(document))


def random_spinor(l, max_degree, cap, seed):
    return _json.loads(_sympspin.random_spinor(l, max_degree, cap, seed))


def random_form(l, degree, max_spinor_degree, cap, seed):
    return _json.loads(_sympspin.random_form(l, degree, max_spinor_degree, cap, seed))


def clifford_basis(i, spinor):
    """e_i . spinor, with i 0-based."""
    return _json.loads(_sympspin.clifford_basis(i, _enc(spinor)))


def op_X(form):
    return _json.loads(_sympspin.op_X(_enc(form)))


def op_Y(form):
    return _json.loads(_sympspin.op_Y(_enc(form)))


def project(name, form):
    """Applies the projector "p10", "p11", "p20", "p21" or "p22"."""
    return _json.loads(_sympspin.project(name, _enc(form)))


def random_curvature(l, seed):
    return _json.loads(_sympspin.random_curvature(l, seed))


def check_symmetries(tensor):
    """Which curvature identities a rank-4 tensor satisfies, by name."""
    return _sympspin.check_symmetries(_enc(tensor))


def ricci_of(tensor):
    return _json.loads(_sympspin.ricci_of(_enc(tensor)))


def weyl_of(tensor):
    return _json.loads(_sympspin.weyl_of(_enc(tensor)))


def sigma_tilde_of(sigma):
    return _json.loads(_sympspin.sigma_tilde_of(_enc(sigma)))


def curvature_action(tensor, spinor):
    return _json.loads(_sympspin.curvature_action(_enc(tensor), _enc(spinor)))
