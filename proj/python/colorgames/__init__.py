"""Colored arena games with balance, bounded-difference and frequency goals.

Arenas are JSON documents (the same format the command-line tool reads);
pass them as text, a dict, or a path.
"""

import json
import os

from . import _core
from ._core import ParseError, StrategyLimitExceeded, TautologyCapExceeded, diff_matrix

__all__ = [
    "analyze", "solve", "synth", "verify", "gen_cnf", "gen_scheduler", "is_tautology",
    "diff_matrix", "ParseError", "StrategyLimitExceeded", "TautologyCapExceeded",
]


def _text(arena):
    if isinstance(arena, dict):
        return json.dumps(arena)
    if isinstance(arena, os.PathLike) or (isinstance(arena, str) and not arena.lstrip().startswith("{")):
        with open(arena) as f:
            return f.read()
    return arena


def _freq(freq):
    if freq is None:
        return ""
    if isinstance(freq, str):
        return freq
    return ",".join(str(v) for v in freq)


def analyze(arena, goal="balanced", freq=None):
    return json.loads(_core.analyze(_text(arena), goal, _freq(freq)))


def solve(arena, goal="balanced", freq=None, max_strategies=1 << 20, threads=1):
    return json.loads(_core.solve(_text(arena), goal, _freq(freq), max_strategies, threads))


def synth(arena, goal="balanced", freq=None, length=100):
    """Returns (payload, prefix) with the prefix as 'src color dst' lines."""
    payload, prefix, _ = _core.synth(_text(arena), goal, _freq(freq), length)
    return json.loads(payload), prefix


def verify(arena, prefix, goal="balanced", freq=None, bound=None):
    """Returns (payload, passed)."""
    payload, passed = _core.verify(_text(arena), prefix, goal, _freq(freq), bound)
    return json.loads(payload), passed


def gen_cnf(dimacs):
    return json.loads(_core.gen_cnf(dimacs))


def gen_scheduler():
    return json.loads(_core.gen_scheduler())


def is_tautology(dimacs):
    return _core.is_tautology(dimacs)
