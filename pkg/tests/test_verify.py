import pytest

from markoff.errors import IdentityViolation, PreconditionViolation
from markoff.report import CheckReport
from markoff.verify import SUITES, SuiteSettings, require, run_suites

SMALL = SuiteSettings(depth=3, samples=10, seed=7, max_length=2, max_entry=3)


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_passes(name):
    (report,) = run_suites([name], SMALL)
    assert report.checks
    assert report.ok, report.failures[:3]


def test_run_all_and_require():
    reports = run_suites(settings=SMALL)
    assert len(reports) == len(SUITES)
    assert all(report.ok for report in reports)
    require(reports)


def test_unknown_suite():
    with pytest.raises(PreconditionViolation):
        run_suites(["tree", "nope"])


def test_report_require():
    report = CheckReport("demo", payload=(1, 2))
    assert report.equal("same", 3, 3)
    assert not report.add("broken", False, "1 != 2")
    assert report.summary() == "demo: 2 checks, 1 failed"
    with pytest.raises(IdentityViolation) as info:
        report.require()
    assert info.value.clause == "demo:broken"
    assert info.value.payload == (1, 2)


def test_report_extend_prefixes_clauses():
    inner = CheckReport("inner")
    inner.add("a", True)
    outer = CheckReport("outer")
    outer.extend(inner)
    assert outer.checks[0].clause == "inner:a"
    assert outer.ok
    assert outer.require() is outer


@pytest.mark.slow
@pytest.mark.parametrize("name", ["continuants", "tree", "tsing", "cantor"])
def test_suites_at_default_depth(name):
    settings = SuiteSettings()
    assert settings.depth == 12
    (report,) = run_suites([name], settings)
    assert report.ok, report.failures[:3]
