"""Acceptance criteria, one test each; a PASS/FAIL summary is printed at the end."""

import itertools
import random
import re
import time
from pathlib import Path

import pytest

from helpers import fuzz_trail
from trailcp import UNLIMITED, LowerEqual, Solver
from trailcp.cli import main
from trailcp.model import build, queens, random_model, to_oracle
from trailcp.oracle import enumerate_solutions

SEEDS = range(100)
FUZZ_SEEDS = range(5)


def random_models():
    rng = random.Random(424242)
    return [random_model(rng) for _ in SEEDS]


def bounds(solver):
    return [(v.min, v.max) for v in solver.variables]


def restored(solver, before):
    return bounds(solver) == before and solver.trail.size == 0 and solver.trail.depth == 0


@pytest.mark.criterion("AC1 trail round-trip fuzz vs copy model (>=10k ops, >=500 nodes, <5 s)")
def test_trail_round_trip_fuzz():
    for seed in FUZZ_SEEDS:
        start = time.perf_counter()
        mismatches, nodes, _ = fuzz_trail(seed, steps=10_000, n_ints=10)
        elapsed = time.perf_counter() - start
        assert mismatches == 0
        assert nodes >= 500
        assert elapsed < 5.0


@pytest.mark.criterion("AC2 at most one trail entry per TrailedInt per node")
def test_timestamp_economy():
    for seed in FUZZ_SEEDS:
        mismatches, _, worst = fuzz_trail(seed, steps=10_000, n_ints=10, check_entries=True)
        assert mismatches == 0
        assert worst <= 1


def _rerun_changes_nothing(solver):
    before = bounds(solver)
    ok = all(p.propagate() for p in solver.propagators)
    return ok and bounds(solver) == before and len(solver.queue) == 0


@pytest.mark.criterion("AC3 propagation fixpoint on 100 random CSPs (+AC6 restoration)")
def test_propagation_fixpoint():
    rng = random.Random(7)
    violations = 0
    checked = 0
    for model in random_models():
        assert len(model.variables) <= 4 and len(model.constraints) <= 6
        assert all(v.max - v.min + 1 <= 6 for v in model.variables)
        solver, search = build(model)
        if solver.failed:
            continue
        before = bounds(solver)
        if not _rerun_changes_nothing(solver):
            violations += 1
        # one bound decision, then propagate
        var = rng.choice(solver.variables)
        value = rng.randint(var.min, var.max)
        solver.trail.new_node()
        ok = var.update_min(value) if rng.random() < 0.5 else var.update_max(value)
        if ok and solver.propagate():
            checked += 1
            if not _rerun_changes_nothing(solver):
                violations += 1
        solver.queue.clear()
        solver.trail.undo_node()
        assert restored(solver, before)
        # searches with a cut and an unlimited budget restore the root
        for budget in (rng.randint(1, 5), UNLIMITED):
            search.search(budget)
            assert restored(solver, before)
    assert violations == 0
    assert checked > 0


@pytest.mark.criterion("AC4 LowerEqual bounds-consistency, exhaustive over [-10,10]")
def test_lower_equal_exhaustive():
    intervals = [(a, b) for a in range(-10, 11) for b in range(a, 11)]
    mismatches = 0
    for (xl, xh), (yl, yh) in itertools.product(intervals, repeat=2):
        s = Solver()
        x, y = s.int_var(xl, xh), s.int_var(yl, yh)
        ok = LowerEqual(x, y).propagate()
        if xl > yh:
            mismatches += ok
        else:
            expected = ((xl, min(xh, yh)), (max(yl, xl), yh))
            mismatches += not ok or ((x.min, x.max), (y.min, y.max)) != expected
    assert mismatches == 0


def _run_complete(model):
    solver, search = build(model, max_solutions=None)
    before = bounds(solver)
    complete = search.search(UNLIMITED)
    names = [v.name for v in model.variables]
    found = [tuple(sol[n] for n in names) for sol in search.solutions]
    return complete, found, restored(solver, before)


@pytest.mark.criterion("AC5 solver == oracle on 100 random CSPs and queens 4-6 (+AC6, <60 s)")
def test_solver_matches_oracle():
    start = time.perf_counter()
    models = random_models()
    for model in models:
        # static order = declaration order, so the first solution is the
        # lexicographic minimum
        model.var_order = [v.name for v in model.variables]
    models += [queens(n) for n in (4, 5, 6)]
    for model in models:
        expected = enumerate_solutions(to_oracle(model))
        complete, found, ok_restore = _run_complete(model)
        assert complete and ok_restore
        assert len(found) == len(set(found))
        assert set(found) == set(expected)
        assert found[:1] == expected[:1]
    _, found4, _ = _run_complete(queens(4))
    assert sorted(found4) == enumerate_solutions(to_oracle(queens(4)))
    assert len(found4) == 2
    assert time.perf_counter() - start < 60.0


@pytest.mark.criterion("AC6 restoration after budget-cut searches")
def test_restoration_after_cut():
    for model in random_models()[:50] + [queens(5), queens(6)]:
        solver, search = build(model)
        before = bounds(solver)
        for budget in (1, 2, 3, 10, UNLIMITED):
            search.search(budget)
            assert restored(solver, before)


@pytest.mark.criterion("AC7 budget contract and determinism on 6-queens")
def test_budget_contract():
    solver, search = build(queens(6))
    assert search.search(1) is False
    assert search.search(UNLIMITED) is True
    first = search.stats.nodes
    assert search.search(UNLIMITED) is True
    assert search.stats.nodes == first
    _, fresh = build(queens(6))
    assert fresh.search(UNLIMITED) is True
    assert fresh.stats.nodes == first


class CountingLowerEqual(LowerEqual):
    calls = 0

    def propagate(self):
        self.calls += 1
        return super().propagate()


@pytest.mark.criterion("AC8 conflict drains the queue without further filtering")
def test_conflict_queue_drain():
    s = Solver()
    x, y = s.int_var(5, 9), s.int_var(1, 4)
    u, v = s.int_var(0, 9), s.int_var(0, 3)
    failing = CountingLowerEqual(x, y)
    other = CountingLowerEqual(u, v)
    s.queue.enqueue(failing)
    s.queue.enqueue(other)
    assert s.propagate() is False
    assert failing.calls == 1
    assert other.calls == 0
    assert (u.min, u.max) == (0, 9)
    assert failing.enqueued is False and other.enqueued is False
    assert len(s.queue) == 0


@pytest.mark.criterion("AC9 CLI golden JSON for queens:4 and exit 2 on parse errors")
def test_cli_golden_and_errors(capsys, tmp_path):
    golden = (Path(__file__).parent / "golden" / "queens4.json").read_text()
    assert main(["solve", "--gen", "queens:4", "--json"]) == 0
    out = capsys.readouterr().out
    assert re.sub(r'"wall_time_ms": [0-9.eE+-]+', '"wall_time_ms": 0', out) == golden

    bad = tmp_path / "bad.txt"
    bad.write_text("var x 1 4\nvar y 0 3\nconstraint leq x z\n")
    assert main(["solve", str(bad)]) == 2
    err = capsys.readouterr().err
    assert "line 3" in err and "'z'" in err
