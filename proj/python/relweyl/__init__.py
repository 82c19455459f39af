"""Exact root systems, relative Weyl groups and graded characters of H*(G/P).

Thin convenience layer over the compiled core: structured commands return
parsed JSON, and every number is exact (arbitrary-precision integers travel
as strings at the boundary).
"""

import json as _json

from ._core import (
    cartan_matrix,
    cli,
    fundamental_degrees,
    positive_roots,
    relative_order,
)
from ._core import weyl_order as _weyl_order_str

__all__ = [
    "cartan_matrix",
    "characters",
    "cli",
    "epsilon",
    "fundamental_degrees",
    "positive_roots",
    "relative",
    "relative_order",
    "roots",
    "verify",
    "weyl",
    "weyl_order",
]


class CommandError(RuntimeError):
    """A CLI-level failure; carries the process-style exit code."""

    def __init__(self, code, message):
        super().__init__(message.strip() or f"exit code {code}")
        self.code = code


def _run_json(args):
    code, out, err = cli(list(args) + ["--output", "json"])
    if code != 0:
        raise CommandError(code, err)
    return _json.loads(out)


def _j_arg(J):
    if not J:
        return "none"
    return ",".join(str(int(j)) for j in J)


def weyl_order(type):
    """|W| as a Python int, exact for every supported type."""
    return int(_weyl_order_str(type))


def roots(type):
    return _run_json(["roots", "--type", type])


def weyl(type):
    return _run_json(["weyl", "--type", type])


def relative(type, J=()):
    """Relative Weyl group report; J is a 1-based iterable of simple roots."""
    return _run_json(["relative", "--type", type, "--J", _j_arg(J)])


def characters(type, J=()):
    return _run_json(["characters", "--type", type, "--J", _j_arg(J)])


def epsilon(type, J=()):
    return _run_json(["epsilon", "--type", type, "--J", _j_arg(J)])


def verify(type=None, J=None, primes=(2, 3, 5, 7), claims=()):
    """Run the verification suite.

    Returns (all_pass, reports) where reports is a list of dicts, one per
    check. J = None sweeps every parabolic subset; otherwise pass a 1-based
    iterable (the empty tuple selects only J = {}).
    """
    args = ["verify"]
    if type is not None:
        args += ["--type", type]
    if J is not None:
        args += ["--J", _j_arg(J)]
    if primes:
        args += ["--primes", ",".join(str(int(p)) for p in primes)]
    if claims:
        args += ["--claims", ",".join(claims)]
    code, out, err = cli(args + ["--output", "json"])
    if code not in (0, 1):
        raise CommandError(code, err)
    reports = [_json.loads(line) for line in out.splitlines() if line]
    return code == 0, reports
