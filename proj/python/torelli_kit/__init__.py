"""Exact Torelli-group computations for simply-connected 4-manifolds with boundary."""

import json

from ._core import *  # noqa: F401,F403
from ._core import certify_json, run_cli, stein_certify_json

__version__ = "0.1.0"


def certify(document):
    """Certificate for an input document (dict or JSON text), returned as a dict."""
    text = document if isinstance(document, str) else json.dumps(document)
    return json.loads(certify_json(text))


def stein_certify(front):
    """Certificate for the Stein domain of a FrontDiagram, returned as a dict."""
    return json.loads(stein_certify_json(front))


def cli(*args, stdin=""):
    """Runs the command-line tool in-process. Returns (exit_code, stdout, stderr)."""
    return run_cli([str(a) for a in args], stdin)
