"""Brute-force enumeration of small CSPs.

Used as a reference for testing the solver. Constraints are evaluated on
complete assignments only; nothing here depends on the propagation or search
code.
"""

import itertools
import math
from typing import NamedTuple

__all__ = [
    "MAX_POINTS",
    "OracleTooLarge",
    "Leq",
    "NeqOffset",
    "AssignEq",
    "OracleProblem",
    "enumerate_solutions",
    "count_solutions",
]

MAX_POINTS = 10**7


class OracleTooLarge(ValueError):
    pass


class Leq(NamedTuple):
    i: int
    j: int

    def holds(self, values):
        return values[self.i] <= values[self.j]


class NeqOffset(NamedTuple):
    """``values[i] + a != values[j] + b``"""

    i: int
    j: int
    a: int = 0
    b: int = 0

    def holds(self, values):
        return values[self.i] + self.a != values[self.j] + self.b


class AssignEq(NamedTuple):
    i: int
    v: int

    def holds(self, values):
        return values[self.i] == self.v


class OracleProblem:
    def __init__(self, bounds, constraints=()):
        self.bounds = [(int(lo), int(hi)) for lo, hi in bounds]
        self.constraints = list(constraints)
        n = len(self.bounds)
        for lo, hi in self.bounds:
            if lo > hi:
                raise ValueError(f"empty domain [{lo}, {hi}]")
        for c in self.constraints:
            indices = (c.i,) if isinstance(c, AssignEq) else (c.i, c.j)
            if any(not 0 <= k < n for k in indices):
                raise ValueError(f"variable index out of range in {c!r}")

    def size(self) -> int:
        return math.prod(hi - lo + 1 for lo, hi in self.bounds)


def enumerate_solutions(problem: OracleProblem) -> list:
    """All satisfying assignments as tuples, in lexicographic order."""
    if problem.size() > MAX_POINTS:
        raise OracleTooLarge(
            f"search space of {problem.size()} points exceeds {MAX_POINTS}")
    ranges = [range(lo, hi + 1) for lo, hi in problem.bounds]
    constraints = problem.constraints
    return [values for values in itertools.product(*ranges)
            if all(c.holds(values) for c in constraints)]


def count_solutions(problem: OracleProblem) -> int:
    return len(enumerate_solutions(problem))
