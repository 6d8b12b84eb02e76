"""Fine gradings of Heisenberg, twisted Heisenberg and color algebras over exact cyclotomic fields."""

import json

from . import _heisgrad
from ._heisgrad import CapExceeded, MathError, ParseError, canonical_group, smith_normal_form

__all__ = [
    "CapExceeded",
    "CliError",
    "MathError",
    "ParseError",
    "canonical_group",
    "cli",
    "enumerate_fine",
    "smith_normal_form",
    "universal_group",
    "verify_grading",
    "weyl",
    "weyl_order_heisenberg",
    "weyl_order_super",
]


class CliError(RuntimeError):
    def __init__(self, code, message):
        super().__init__(f"exit {code}: {message}")
        self.code = code


def cli(*args):
    """Run a CLI command; returns (exit code, stdout, stderr)."""
    return _heisgrad.run([str(a) for a in args])


def _json(*args):
    code, out, err = cli(*args, "--format", "json")
    if code != 0:
        raise CliError(code, err.strip())
    return json.loads(out)


def _source(twisted=None, heisenberg=None, super_km=None):
    if twisted is not None:
        text = twisted if isinstance(twisted, str) else ",".join(str(x) for x in twisted)
        return ["--twisted", text]
    if heisenberg is not None:
        return ["--heisenberg", heisenberg]
    if super_km is not None:
        return ["--super", f"{super_km[0]},{super_km[1]}"]
    raise ValueError("give twisted, heisenberg or super_km")


def enumerate_fine(twisted=None, heisenberg=None, super_km=None):
    return _json("enumerate-fine", *_source(twisted, heisenberg, super_km))


def weyl(twisted=None, heisenberg=None, super_km=None, params=None, bruteforce=False):
    args = ["weyl", *_source(twisted, heisenberg, super_km)]
    if params is not None:
        args += ["--params", params]
    if bruteforce:
        args.append("--bruteforce")
    return _json(*args)


def universal_group(grading):
    return _heisgrad.universal_group(grading if isinstance(grading, str) else json.dumps(grading))


def verify_grading(grading):
    return json.loads(_heisgrad.verify_grading(grading if isinstance(grading, str) else json.dumps(grading)))


def weyl_order_heisenberg(k):
    return int(_heisgrad.weyl_order_heisenberg(k))


def weyl_order_super(k, m, r):
    return int(_heisgrad.weyl_order_super(k, m, r))
