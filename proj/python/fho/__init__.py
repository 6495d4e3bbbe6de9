"""Forced harmonic oscillator: classical propagators, the moving canonical
frame, and transition probabilities between oscillator eigenstates."""

import json as _json

from ._core import *  # noqa: F401,F403
from ._core import (
    parse_scenario as _parse_scenario,
    run_command as _run_command,
    run_verification as _run_verification,
)

__version__ = "0.1.0"


def _dump(scenario):
    return scenario if isinstance(scenario, str) else _json.dumps(scenario or {})


def parse_scenario(scenario=None):
    """Validate a scenario (dict or JSON text) and return it with defaults."""
    return _json.loads(_parse_scenario(_dump(scenario)))


def verify(scenario=None, suite="all", tol=1e-12):
    """Run a verification suite and return the report as a dict."""
    return _json.loads(_run_verification(_dump(scenario), suite, tol))


def run(command, scenario=None, out="out", tol=1e-12, suite="all"):
    """Run a CLI command in-process. Returns (exit_code, message)."""
    return _run_command(command, _dump(scenario), str(out), tol, suite)
