"""Exact checks for Hecke-algebra dualities and linear Koszul duality."""

import json as _json

try:
    from lkdual._lkdual import (
        hecke_eval,
        hecke_equal,
        verify_hecke,
        verify_koszul,
        verify_convolution,
    )
except ImportError:  # running against an in-tree build directory
    from _lkdual import (
        hecke_eval,
        hecke_equal,
        verify_hecke,
        verify_koszul,
        verify_convolution,
    )

__all__ = [
    "hecke_eval",
    "hecke_equal",
    "verify_hecke",
    "verify_koszul",
    "verify_convolution",
    "verify",
]


def verify(suite="all", **params):
    """Run a verification suite and return the parsed report (a dict).

    suite is one of "hecke", "koszul", "convolution" or "all"; keyword
    arguments are forwarded to the underlying suite runner.
    """
    runners = {
        "hecke": verify_hecke,
        "koszul": verify_koszul,
        "convolution": verify_convolution,
    }
    if suite == "all":
        shared = {k: v for k, v in params.items() if k in ("seed", "trials")}
        if shared != params:
            raise ValueError('suite "all" only accepts seed and trials')
        return {name: _json.loads(fn(**shared)) for name, fn in runners.items()}
    if suite not in runners:
        raise ValueError(f"unknown suite {suite!r}")
    return _json.loads(runners[suite](**params))
