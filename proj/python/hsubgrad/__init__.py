"""Subgradient method on the Poincare disk."""

import json

from ._hsubgrad import (
    Error,
    busemann_gradient,
    busemann_value,
    distance,
    exp,
    log,
    norm,
    oracle_names,
    suite_names,
)
from . import _hsubgrad

__all__ = [
    "Error",
    "busemann_gradient",
    "busemann_value",
    "distance",
    "exp",
    "log",
    "norm",
    "oracle_names",
    "reproduce",
    "run_suite",
    "solve",
    "suite_names",
]


def solve(config_text):
    """Run a config given as text; returns the trace as a dict."""
    return json.loads(_hsubgrad._solve_text(config_text))


def run_suite(name, n=10_000, seed=7, threads=0):
    """Run a verification suite; returns a list of report dicts."""
    return json.loads(_hsubgrad._run_suite(name, n, seed, threads))


def reproduce(steps=10_000, x0=0.9j):
    """Run the two-Busemann example on the y-axis and its checks."""
    return json.loads(_hsubgrad._reproduce(steps, complex(x0)))
