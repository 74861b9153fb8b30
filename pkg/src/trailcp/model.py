"""Model files: parsing, generators, solving and oracle cross-checking.

A model is a line-oriented text file::

    # comment
    var x 1 4
    var y 0 9
    constraint leq x y
    constraint neq_offset x y 1 0     # x + 1 != y + 0
    search static_min y x
    limit nodes 1000
    limit solutions 10

Variables must be declared before a constraint uses them. Variables missing
from the ``search`` line are branched on after the listed ones, in
declaration order.
"""

import random
import re
import time
from dataclasses import dataclass, field

from . import oracle
from .constraints import LowerEqual, NotEqualOffset
from .propagation import Solver
from .search import UNLIMITED, Search, StaticMin

__all__ = [
    "DEFAULT_MAX_SOLUTIONS",
    "ModelError",
    "VarDecl",
    "ConstraintDecl",
    "Model",
    "RunReport",
    "parse_model",
    "format_model",
    "queens",
    "chain",
    "generate",
    "random_model",
    "build",
    "solve_model",
    "to_oracle",
    "verify_against_oracle",
]

DEFAULT_MAX_SOLUTIONS = 1000
CONSTRAINT_ARITY = {"leq": 2, "neq_offset": 4}
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class ModelError(ValueError):
    """Parse or semantic error in a model, with its 1-based line number."""

    def __init__(self, message, lineno=None):
        super().__init__(message)
        self.lineno = lineno

    def __str__(self):
        msg = super().__str__()
        return f"line {self.lineno}: {msg}" if self.lineno is not None else msg


@dataclass
class VarDecl:
    name: str
    min: int
    max: int


@dataclass
class ConstraintDecl:
    kind: str
    args: tuple


@dataclass
class Model:
    variables: list = field(default_factory=list)
    constraints: list = field(default_factory=list)
    heuristic: str = "static_min"
    var_order: list = field(default_factory=list)
    max_nodes: int = UNLIMITED
    max_solutions: int = DEFAULT_MAX_SOLUTIONS

    def search_order(self):
        listed = set(self.var_order)
        return list(self.var_order) + [v.name for v in self.variables
                                       if v.name not in listed]


@dataclass
class RunReport:
    solutions: list
    nodes: int
    failures: int
    solutions_found: int
    complete: bool
    wall_time_ms: float
    root_failed: bool

    def to_dict(self):
        return {
            "solutions": self.solutions,
            "stats": {
                "nodes": self.nodes,
                "failures": self.failures,
                "solutions_found": self.solutions_found,
                "complete": self.complete,
                "wall_time_ms": self.wall_time_ms,
            },
            "root_failed": self.root_failed,
        }

    def to_text(self):
        lines = ["solution: " + " ".join(f"{k}={v}" for k, v in sol.items())
                 for sol in self.solutions]
        lines.append(
            f"stats: nodes={self.nodes} failures={self.failures} "
            f"solutions_found={self.solutions_found} "
            f"complete={str(self.complete).lower()} "
            f"root_failed={str(self.root_failed).lower()} "
            f"wall_time_ms={self.wall_time_ms}")
        return "\n".join(lines) + "\n"


def _int(token, lineno, what):
    try:
        return int(token)
    except ValueError:
        raise ModelError(f"expected integer {what}, got {token!r}", lineno) from None


def _positive(token, lineno, what):
    value = _int(token, lineno, what)
    if value <= 0:
        raise ModelError(f"{what} must be positive, got {token!r}", lineno)
    return value


def parse_model(text: str) -> Model:
    model = Model()
    declared = set()
    seen_search = False

    def check_name(name, lineno):
        if name not in declared:
            raise ModelError(f"unknown variable {name!r}", lineno)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        head, rest = tokens[0], tokens[1:]
        if head == "var":
            if len(rest) != 3:
                raise ModelError("expected 'var <name> <min> <max>'", lineno)
            name = rest[0]
            if not _NAME.match(name):
                raise ModelError(f"invalid variable name {name!r}", lineno)
            if name in declared:
                raise ModelError(f"duplicate variable {name!r}", lineno)
            lo = _int(rest[1], lineno, "min")
            hi = _int(rest[2], lineno, "max")
            if lo > hi:
                raise ModelError(f"empty domain for {name!r}: min {lo} > max {hi}", lineno)
            declared.add(name)
            model.variables.append(VarDecl(name, lo, hi))
        elif head == "constraint":
            if not rest:
                raise ModelError("expected a constraint kind", lineno)
            kind, args = rest[0], rest[1:]
            if kind not in CONSTRAINT_ARITY:
                raise ModelError(f"unknown constraint kind {kind!r}", lineno)
            if len(args) != CONSTRAINT_ARITY[kind]:
                raise ModelError(
                    f"{kind} takes {CONSTRAINT_ARITY[kind]} arguments, got {len(args)}",
                    lineno)
            check_name(args[0], lineno)
            check_name(args[1], lineno)
            if kind == "leq":
                parsed = (args[0], args[1])
            else:
                parsed = (args[0], args[1], _int(args[2], lineno, "offset"),
                          _int(args[3], lineno, "offset"))
            model.constraints.append(ConstraintDecl(kind, parsed))
        elif head == "search":
            if seen_search:
                raise ModelError("duplicate 'search' line", lineno)
            if not rest or rest[0] != "static_min":
                raise ModelError("expected 'search static_min [names...]'", lineno)
            order = rest[1:]
            for name in order:
                check_name(name, lineno)
            if len(set(order)) != len(order):
                raise ModelError("variable listed twice in search order", lineno)
            seen_search = True
            model.heuristic = rest[0]
            model.var_order = order
        elif head == "limit":
            if len(rest) != 2 or rest[0] not in ("nodes", "solutions"):
                raise ModelError("expected 'limit nodes|solutions <k>'", lineno)
            value = _positive(rest[1], lineno, f"{rest[0]} limit")
            if rest[0] == "nodes":
                model.max_nodes = value
            else:
                model.max_solutions = value
        else:
            raise ModelError(f"unknown directive {head!r}", lineno)
    return model


def format_model(model: Model) -> str:
    lines = [f"var {v.name} {v.min} {v.max}" for v in model.variables]
    lines += [" ".join(["constraint", c.kind, *map(str, c.args)])
              for c in model.constraints]
    lines.append(" ".join([f"search {model.heuristic}", *model.var_order]))
    if model.max_nodes != UNLIMITED:
        lines.append(f"limit nodes {model.max_nodes}")
    if model.max_solutions != DEFAULT_MAX_SOLUTIONS:
        lines.append(f"limit solutions {model.max_solutions}")
    return "\n".join(lines) + "\n"


def queens(n: int) -> Model:
    """One variable per column holding the queen's row."""
    model = Model()
    names = [f"q{i}" for i in range(n)]
    model.variables = [VarDecl(name, 0, n - 1) for name in names]
    for i in range(n):
        for j in range(i + 1, n):
            qi, qj = names[i], names[j]
            model.constraints += [
                ConstraintDecl("neq_offset", (qi, qj, 0, 0)),
                ConstraintDecl("neq_offset", (qi, qj, i, j)),
                ConstraintDecl("neq_offset", (qi, qj, -i, -j)),
            ]
    model.var_order = names
    return model


def chain(n: int) -> Model:
    """Non-decreasing sequence ``x0 <= x1 <= ...`` over ``[0, n-1]``."""
    model = Model()
    names = [f"x{i}" for i in range(n)]
    model.variables = [VarDecl(name, 0, n - 1) for name in names]
    model.constraints = [ConstraintDecl("leq", (a, b)) for a, b in zip(names, names[1:])]
    model.var_order = names
    return model


GENERATORS = {"queens": queens, "chain": chain}


def generate(spec: str) -> Model:
    """Build a model from a generator spec such as ``queens:8``."""
    kind, _, arg = spec.partition(":")
    if kind not in GENERATORS:
        raise ModelError(f"unknown generator {kind!r} (known: {', '.join(GENERATORS)})")
    try:
        n = int(arg)
    except ValueError:
        raise ModelError(f"generator size must be an integer, got {arg!r}") from None
    if n <= 0:
        raise ModelError(f"generator size must be positive, got {n}")
    return GENERATORS[kind](n)


def random_model(rng: random.Random, max_vars=4, max_width=6, max_constraints=6,
                 max_offset=2) -> Model:
    """Small random model over leq and neq_offset constraints."""
    model = Model()
    n = rng.randint(1, max_vars)
    for k in range(n):
        lo = rng.randint(-3, 3)
        model.variables.append(VarDecl(f"v{k}", lo, lo + rng.randint(0, max_width - 1)))
    if n >= 2:
        for _ in range(rng.randint(0, max_constraints)):
            i, j = rng.sample(range(n), 2)
            x, y = f"v{i}", f"v{j}"
            if rng.random() < 0.5:
                model.constraints.append(ConstraintDecl("leq", (x, y)))
            else:
                a = rng.randint(-max_offset, max_offset)
                b = rng.randint(-max_offset, max_offset)
                model.constraints.append(ConstraintDecl("neq_offset", (x, y, a, b)))
    model.var_order = [v.name for v in model.variables]
    rng.shuffle(model.var_order)
    return model


_FROM_MODEL = object()


def build(model: Model, max_solutions=_FROM_MODEL):
    """Create the solver and search for ``model``.

    ``max_solutions`` overrides the model's collection cap; ``None`` collects
    every solution.
    """
    solver = Solver()
    by_name = {v.name: solver.int_var(v.min, v.max, v.name) for v in model.variables}
    for c in model.constraints:
        if c.kind == "leq":
            propagator = LowerEqual(by_name[c.args[0]], by_name[c.args[1]])
        else:
            x, y, a, b = c.args
            propagator = NotEqualOffset(by_name[x], by_name[y], a, b)
        if not solver.add_propagator(propagator):
            break
    cap = model.max_solutions if max_solutions is _FROM_MODEL else max_solutions
    heuristic = StaticMin(solver.trail, [by_name[n] for n in model.search_order()])
    return solver, Search(solver, heuristic, max_solutions=cap)


def solve_model(model: Model, max_nodes=None, max_solutions=None) -> RunReport:
    solver, search = build(model, model.max_solutions if max_solutions is None
                           else max_solutions)
    budget = model.max_nodes if max_nodes is None else max_nodes
    start = time.perf_counter()
    complete = search.search(budget)
    elapsed = (time.perf_counter() - start) * 1000.0
    stats = search.stats
    return RunReport(
        solutions=search.solutions,
        nodes=stats.nodes,
        failures=stats.failures,
        solutions_found=stats.solutions,
        complete=complete,
        wall_time_ms=round(elapsed, 3),
        root_failed=solver.failed,
    )


def to_oracle(model: Model) -> oracle.OracleProblem:
    index = {v.name: k for k, v in enumerate(model.variables)}
    relations = []
    for c in model.constraints:
        if c.kind == "leq":
            relations.append(oracle.Leq(index[c.args[0]], index[c.args[1]]))
        else:
            x, y, a, b = c.args
            relations.append(oracle.NeqOffset(index[x], index[y], a, b))
    return oracle.OracleProblem([(v.min, v.max) for v in model.variables], relations)


def verify_against_oracle(model: Model) -> bool:
    """Compare the solver's solutions with brute-force enumeration.

    Runs without node budget or solution cap. Raises
    :class:`~trailcp.oracle.OracleTooLarge` if the model is too big.
    """
    expected = oracle.enumerate_solutions(to_oracle(model))
    solver, search = build(model, max_solutions=None)
    if not search.search(UNLIMITED):
        return False
    names = [v.name for v in model.variables]
    found = [tuple(sol[n] for n in names) for sol in search.solutions]
    return len(found) == len(set(found)) and set(found) == set(expected)
