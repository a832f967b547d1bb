"""The cross-checking suites themselves: deterministic, green, and
serializable.

Every suite compares two independent computation routes case by case; a
healthy tree runs all of them with zero mismatches.  The record format is
the machine-readable contract, so it must round-trip.
"""

from fractions import Fraction

import pytest

from tilecount import VerificationReport, run_suite
from tilecount.verify import (
    SUITE_NAMES,
    format_report,
    parse_record,
    report_record,
)


def test_every_suite_passes_small():
    for name in SUITE_NAMES:
        if name == "all":
            continue
        reports = run_suite(name, n=3, cases=3, seed=1)
        assert reports, name
        bad = [r for r in reports if not r.equal]
        assert not bad, (name, bad[:3])


def test_all_runs_every_suite():
    reports = run_suite("all", n=2, cases=2, seed=2)
    assert {r.suite for r in reports} == set(SUITE_NAMES) - {"all"}
    assert all(r.equal for r in reports)


def test_same_seed_same_cases():
    a = run_suite("stanley", cases=4, seed=9)
    b = run_suite("stanley", cases=4, seed=9)
    assert [report_record(r) for r in a] == [report_record(r) for r in b]


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        run_suite("everything")


def test_record_round_trip():
    r = VerificationReport(
        suite="stanley",
        case="wrap-3",
        route_a=Fraction(22, 7),
        route_b=Fraction(22, 7),
        equal=True,
        runtime=0.25,
    )
    back = parse_record(report_record(r))
    assert (back.suite, back.case) == (r.suite, r.case)
    assert back.route_a == r.route_a and back.route_b == r.route_b
    assert back.equal is True


def test_record_keeps_disagreements():
    r = VerificationReport("s", "c", Fraction(1), Fraction(2), False, 0.0)
    back = parse_record(report_record(r))
    assert back.equal is False
    assert back.route_a != back.route_b


def test_parse_record_rejects_malformed_lines():
    with pytest.raises(ValueError):
        parse_record("too few fields")


def test_format_report_flags_failures():
    good = VerificationReport("s", "c", Fraction(1), Fraction(1), True, 0.001)
    bad = VerificationReport("s", "c", Fraction(1), Fraction(2), False, 0.001)
    assert "ok" in format_report(good)
    assert "FAIL" in format_report(bad)
