"""A small finite-domain constraint solver built on trailing.

The pieces are independent and can be extended separately: reversible state
(:mod:`trailcp.trail`), interval variables, propagators and the propagation
queue, and a non-recursive depth-first search.
"""

from .constraints import LowerEqual, NotEqualOffset
from .propagation import PropagationQueue, Propagator, Solver
from .search import (UNLIMITED, AssignDec, Decision, GreaterEqualDec, Heuristic,
                     LowerEqualDec, Search, SearchStats, StaticMin)
from .trail import Change, Trail, TrailedInt
from .variables import IntervalVar

__all__ = [
    "Change", "Trail", "TrailedInt", "IntervalVar", "Propagator",
    "PropagationQueue", "Solver", "LowerEqual", "NotEqualOffset", "Decision",
    "AssignDec", "GreaterEqualDec", "LowerEqualDec", "Heuristic", "StaticMin",
    "Search", "SearchStats", "UNLIMITED",
]
