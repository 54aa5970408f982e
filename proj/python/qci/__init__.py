"""Python access to the qci verification core.

Results come back as parsed JSON documents, the same shapes the CLI emits.
"""

import json

from . import _qci

__all__ = ["run_cli", "verify", "solve_g", "obstruction", "binom_valuation"]


def run_cli(*args):
    """Run a CLI subcommand in-process; returns (exit_code, stdout, stderr)."""
    return _qci.run_cli([str(a) for a in args])


def verify(spec, coproduct="paper31"):
    if not isinstance(spec, str):
        spec = json.dumps(spec)
    return json.loads(_qci.verify(spec, coproduct))


def solve_g(spec):
    if not isinstance(spec, str):
        spec = json.dumps(spec)
    return json.loads(_qci.solve_g(spec))


def obstruction(a, characteristic=0):
    return json.loads(_qci.obstruction(list(a), characteristic))


binom_valuation = _qci.binom_valuation
