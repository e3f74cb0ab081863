import pytest

from src import closedness, verification
from src.exceptions import NotCaterpillarError, TooLargeError
from src.models import CheckResult
from src.verification import (
    CHECKS,
    VerifyOptions,
    check_basis_size_identities,
    check_caterpillar_primes,
    check_closed_cross_check,
    check_closure_propositions,
    check_cycle_closure_numbers,
    check_degree_gap_example,
    check_fig2_dimension,
    check_figure_labelings,
    check_oracle_certification,
    check_spider_not_3closed,
    check_tree_criterion,
    check_weakly_closed_bound,
    run_verification,
)


@pytest.fixture
def small():
    return VerifyOptions(max_n=4, seed=42, samples=30, caterpillars=5)


@pytest.mark.parametrize("check", [
    check_cycle_closure_numbers,
    check_degree_gap_example,
    check_spider_not_3closed,
    check_fig2_dimension,
    check_caterpillar_primes,
    check_closed_cross_check,
    check_tree_criterion,
    check_weakly_closed_bound,
    check_basis_size_identities,
    check_figure_labelings,
    check_closure_propositions,
])
def test_check_passes_on_a_small_corpus(check, small):
    result = check(small)
    assert result.ran
    assert result.failures == []
    assert result.passed
    assert result.cases > 0


def test_degree_gap_details(small):
    result = check_degree_gap_example(small)
    assert result.details["degree_histogram"] == {"2": 4, "3": 3, "5": 1}


def test_cycle_check_covers_at_least_c5(small):
    assert check_cycle_closure_numbers(small).details["n_range"] == [4, 5]


def test_cycle_check_runs_a_full_search(monkeypatch):
    # a wrong cycle value inside the search must not leak into the check
    monkeypatch.setattr(closedness, "cycle_closure_value", lambda length: length - 1)
    result = check_cycle_closure_numbers(VerifyOptions(max_n=6, samples=30, caterpillars=5))
    assert result.passed, result.failures
    assert result.details["n_range"] == [4, 6]


@pytest.mark.parametrize("max_n,expected", [(None, 9), (5, 5), (12, 9)])
def test_tree_corpus_keeps_its_own_default_size(monkeypatch, max_n, expected):
    requested = []

    def trees(bound):
        requested.append(bound)
        return []

    monkeypatch.setattr(verification, "non_path_trees_up_to", trees)
    result = check_tree_criterion(VerifyOptions(max_n=max_n, samples=30, caterpillars=5))
    assert requested == [expected]
    assert result.details["max_n"] == expected


def test_basis_identity_corpus_keeps_its_own_default_size(monkeypatch):
    requested = []

    def trees(bound):
        requested.append(bound)
        return []

    monkeypatch.setattr(verification, "non_path_trees_up_to", trees)
    monkeypatch.setattr(verification, "connected_graphs_up_to", lambda bound, min_n=1: [])
    result = check_basis_size_identities(VerifyOptions(samples=30, caterpillars=2))
    assert requested == [9]
    assert result.details["tree_max_n"] == 9
    assert result.details["general_max_n"] == 6


def test_oracle_is_skipped_unless_requested(small):
    result = check_oracle_certification(small)
    assert not result.ran
    assert "oracle" in result.skipped_reason


@pytest.mark.slow
def test_oracle_certification():
    result = check_oracle_certification(VerifyOptions(max_n=3, oracle=True, oracle_max_n=3))
    assert result.passed, result.failures


def test_report_status(small):
    report = run_verification(small, only=["degree_gap_example", "fig2_dimension"])
    assert [c.name for c in report.checks] == ["degree_gap_example", "fig2_dimension"]
    assert report.status == "pass"
    assert report.seed == 42
    assert report.guards["max_n"] == 4

    report = run_verification(small, only=["degree_gap_example", "oracle_certification"])
    assert report.passed
    assert report.skipped == ["oracle_certification"]
    assert report.status == "incomplete"


def test_guard_errors_skip_and_domain_errors_fail(monkeypatch, small):
    def guarded(options):
        raise TooLargeError("closure_number", 12, 9)

    def broken(options):
        raise NotCaterpillarError("decompose needs a caterpillar tree")

    def failing(options):
        return CheckResult(name="failing", ran=True, passed=False, cases=1, failures=["1 != 2"])

    monkeypatch.setattr(verification, "CHECKS", (("guarded", guarded), ("broken", broken), ("failing", failing)))
    report = run_verification(small)
    guarded_result, broken_result, failing_result = report.checks
    assert not guarded_result.ran
    assert "exceeds guard" in guarded_result.skipped_reason
    assert broken_result.ran and not broken_result.passed
    assert broken_result.failures[0].startswith("NotCaterpillarError")
    assert not failing_result.passed
    assert report.status == "fail"


def test_check_names_are_unique():
    names = [name for name, _ in CHECKS]
    assert len(names) == len(set(names))
