"""Decisions, branching heuristics, and the depth-first search.

The search keeps its own stack of decision iterators, one per open node of
the current branch, instead of recursing. Each decision applied opens a trail
node; leaving a node undoes it.
"""

from dataclasses import dataclass

from .propagation import Solver
from .trail import Trail, TrailedInt
from .variables import IntervalVar

__all__ = [
    "UNLIMITED",
    "Decision",
    "AssignDec",
    "GreaterEqualDec",
    "LowerEqualDec",
    "Heuristic",
    "StaticMin",
    "SearchStats",
    "Search",
]

UNLIMITED = 2**62


class Decision:
    """Turns the current node into one of its children.

    :meth:`apply` returns ``False`` iff the decision itself empties a domain.
    """

    def apply(self) -> bool:
        raise NotImplementedError


class AssignDec(Decision):
    def __init__(self, x: IntervalVar, v: int):
        self.x, self.v = x, v

    def apply(self):
        return self.x.update_min(self.v) and self.x.update_max(self.v)

    def __repr__(self):
        return f"{self.x.name} == {self.v}"


class GreaterEqualDec(Decision):
    def __init__(self, x: IntervalVar, v: int):
        self.x, self.v = x, v

    def apply(self):
        return self.x.update_min(self.v)

    def __repr__(self):
        return f"{self.x.name} >= {self.v}"


class LowerEqualDec(Decision):
    def __init__(self, x: IntervalVar, v: int):
        self.x, self.v = x, v

    def apply(self):
        return self.x.update_max(self.v)

    def __repr__(self):
        return f"{self.x.name} <= {self.v}"


class Heuristic:
    """Defines and orders the children of a node.

    :meth:`next_decisions` returns an iterator over the decisions leading to
    each child, in visiting order. An empty iterator marks a solution.
    """

    def next_decisions(self):
        raise NotImplementedError


class StaticMin(Heuristic):
    """Binary branching on the first unassigned variable, in array order.

    The left child takes the variable's minimum, the right child removes it.
    """

    def __init__(self, trail: Trail, variables):
        self.vars = list(variables)
        # reversible so the scan resumes where the parent node left off
        self.next_unassigned = TrailedInt(trail, 0)

    def next_decisions(self):
        variables = self.vars
        i = self.next_unassigned.get_value()
        while i < len(variables) and variables[i].is_assigned():
            i += 1
        self.next_unassigned.set_value(i)
        if i == len(variables):
            return iter(())
        x = variables[i]
        v = x.get_min()
        return iter((LowerEqualDec(x, v), GreaterEqualDec(x, v + 1)))


class _Lookahead:
    """Iterator wrapper exposing ``has_next``."""

    __slots__ = ("_it", "_head")
    _END = object()

    def __init__(self, iterable):
        self._it = iter(iterable)
        self._head = next(self._it, self._END)

    def has_next(self):
        return self._head is not self._END

    def next(self):
        head = self._head
        self._head = next(self._it, self._END)
        return head


@dataclass
class SearchStats:
    nodes: int = 0
    failures: int = 0
    solutions: int = 0


class Search:
    """Depth-first search over the tree defined by ``heuristic``.

    ``on_solution`` is called with the search object at every solution leaf.
    It may read the variables but must not modify any domain. By default each
    solution is recorded in :attr:`solutions` as a ``{name: value}`` dict over
    the solver's variables, up to ``max_solutions`` entries (``None`` for no
    cap); the search itself never stops early because of the cap.
    """

    def __init__(self, solver: Solver, heuristic: Heuristic, on_solution=None,
                 max_solutions=1000):
        self.solver = solver
        self.trail = solver.trail
        self.heuristic = heuristic
        self.on_solution = on_solution
        self.max_solutions = max_solutions
        self.decisions = []
        self.solutions = []
        self.stats = SearchStats()

    def _solution_found(self):
        self.stats.solutions += 1
        if self.on_solution is not None:
            self.on_solution(self)
        elif self.max_solutions is None or len(self.solutions) < self.max_solutions:
            self.solutions.append({v.name: v.get_min() for v in self.solver.variables})

    def propagate_and_expand(self) -> bool:
        """Propagate the node just entered, then expand it.

        Returns ``False`` iff the node is a leaf, failed or solution.
        """
        if not self.solver.propagate():
            self.stats.failures += 1
            return False
        decisions = _Lookahead(self.heuristic.next_decisions())
        if not decisions.has_next():
            self._solution_found()
            return False
        self.decisions.append(decisions)
        return True

    def search(self, max_nodes: int = UNLIMITED) -> bool:
        """Explore the tree, visiting at most ``max_nodes`` nodes.

        Returns ``True`` iff the whole tree was explored; the root itself is
        not counted as a node. Note that an exploration finishing with exactly
        ``max_nodes`` nodes reports ``False``.

        The search runs inside its own trail node, so every change it makes,
        including root propagation, is undone on return. Statistics and
        collected solutions are reset at each call.
        """
        self.stats = SearchStats()
        self.solutions = []
        trail = self.trail
        decisions = self.decisions
        base_depth = trail.depth
        nodes = 0
        trail.new_node()
        try:
            if self.solver.failed or not self.propagate_and_expand():
                return True
            while decisions and nodes < max_nodes:
                top = decisions[-1]
                if top.has_next():
                    nodes += 1
                    trail.new_node()
                    decision = top.next()
                    if not decision.apply():
                        # a partially applied decision may have woken
                        # propagators for the node being abandoned
                        self.solver.queue.clear()
                        self.stats.failures += 1
                        trail.undo_node()
                    elif not self.propagate_and_expand():
                        trail.undo_node()
                else:
                    decisions.pop()
                    trail.undo_node()
            return nodes < max_nodes
        finally:
            self.stats.nodes = nodes
            while trail.depth > base_depth:
                trail.undo_node()
            decisions.clear()
