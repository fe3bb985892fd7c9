"""The verification harness itself: reports, failure detection."""

from simplest_cubic.solver import solve_family
from simplest_cubic.verify import check_solutions, run_checks


def test_check_solutions_on_precomputed_slice():
    results = [solve_family(m) for m in range(-1, 6)]
    ok, lines = check_solutions(lo=-1, hi=5, results=results)
    assert ok
    assert "12 orbit rows" in lines[0]


def test_check_solutions_detects_missing_rows():
    results = [solve_family(4)]  # wrong index: no rows at all
    ok, lines = check_solutions(lo=2, hi=2, results=results)
    assert not ok
    assert "missing solution row" in lines[0]


def test_run_checks_aggregates():
    ok, lines = run_checks(["equal-conductor", "max-lambda"])
    assert ok
    assert lines[0] == "[ok] equal-conductor"
    assert any(line == "[ok] max-lambda" for line in lines)
