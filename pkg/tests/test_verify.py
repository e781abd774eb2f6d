"""Verification harness: suites pass on honest code and catch planted lies."""

import pytest

import chowchi.verify as verify_mod
from chowchi.chow import ChowParams, chow_euler_closed
from chowchi.verify import (
    SUITE_NAMES,
    VerificationReport,
    all_suites,
    base_cases_suite,
    quaternionic_suite,
    recursion_suite,
    run_suite,
    series_suite,
)


def test_suite_names_cover_dispatch():
    for name in SUITE_NAMES:
        report = run_suite(name, max_p=2, max_n=3, max_d=4, order=6)
        assert report.ok
        assert report.cases_run > 0


def test_recursion_suite_small():
    report = recursion_suite(max_p=2, max_n=3, max_d=4, order=6)
    assert report.ok
    assert report.suite == "recursion"
    assert report.failures == []


def test_base_cases_suite_small():
    report = base_cases_suite(max_n=3, max_d=4)
    assert report.ok
    assert report.cases_run == 4 * 5


def test_series_suite_small():
    report = series_suite(max_n=3, order=6, max_pow=8)
    assert report.ok


def test_quaternionic_suite_small():
    report = quaternionic_suite(max_n=3, max_d=4)
    assert report.ok


def test_all_suites_aggregates():
    combined = all_suites(max_p=2, max_n=3, max_d=4, order=6)
    parts = [
        recursion_suite(max_p=2, max_n=3, max_d=4, order=6),
        base_cases_suite(max_n=3, max_d=4),
        series_suite(max_n=3, order=6),
        quaternionic_suite(max_n=3, max_d=4),
    ]
    assert combined.cases_run == sum(part.cases_run for part in parts)
    assert combined.ok


def test_run_suite_rejects_unknown_name():
    with pytest.raises(ValueError):
        run_suite("spectral", max_p=2, max_n=3, max_d=4, order=6)


def test_run_suite_rejects_negative_bounds():
    with pytest.raises(ValueError):
        run_suite("recursion", max_p=-1, max_n=3, max_d=4, order=6)


def test_report_json_shape():
    report = recursion_suite(max_p=1, max_n=2, max_d=3, order=4)
    payload = report.to_json_dict()
    assert payload["suite"] == "recursion"
    assert payload["cases_run"] == str(report.cases_run)
    assert payload["failures"] == []
    assert isinstance(payload["elapsed_ms"], str)
    int(payload["cases_run"])
    int(payload["elapsed_ms"])


def test_report_check_records_failure():
    report = VerificationReport(suite="adhoc")
    report.check({"p": "1"}, "left", 3, "right", 4)
    assert not report.ok
    assert report.cases_run == 1
    failure = report.failures[0]
    assert failure.expected_value == "3"
    assert failure.actual_value == "4"
    assert failure.inputs == {"p": "1"}


def test_recursion_suite_catches_lying_closed_form(monkeypatch):
    honest = chow_euler_closed

    def lying(params):
        value = honest(params)
        if (params.p, params.n, params.d) == (1, 2, 2):
            return type(value)(chi=value.chi + 1, method=value.method)
        return value

    monkeypatch.setattr(verify_mod, "chow_euler_closed", lying)
    report = verify_mod.recursion_suite(max_p=2, max_n=3, max_d=4, order=6)
    assert not report.ok
    assert len(report.failures) > 0
    failure = report.failures[0]
    assert failure.inputs["p"] == "1"
    assert failure.inputs["n"] == "2"
    assert failure.inputs["d"] == "2"
    assert failure.expected_value != failure.actual_value
    payload = report.to_json_dict()
    entry = payload["failures"][0]
    assert set(entry) == {"inputs", "expected", "actual"}
    assert set(entry["expected"]) == {"path", "value"}


def test_lying_path_does_not_leak(monkeypatch):
    # The monkeypatch above must not poison later honest runs.
    report = recursion_suite(max_p=2, max_n=3, max_d=4, order=6)
    assert report.ok
    assert chow_euler_closed(ChowParams(1, 2, 2)).chi == 6
