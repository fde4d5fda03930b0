import json

import pytest

from jpgeom import catalog
from jpgeom.suites import SUITES, SuiteConfig, run_suite

# thm2.8 is exercised at full size in test_acceptance.py
SAMPLES = {"thm2.8": 20}


@pytest.mark.parametrize("name", SUITES)
def test_suite_passes(name):
    report = run_suite(name, SuiteConfig(samples=SAMPLES.get(name)))
    failing = [c.name for c in report.cases if c.status == "fail"]
    assert report.ok, failing
    assert report.passed > 0


def test_report_schema_and_order():
    data = run_suite("prop2.5").to_json()
    assert list(data) == ["suite", "cases", "passed", "failed", "skipped", "elapsed_ms"]
    names = [c["name"] for c in data["cases"]]
    assert names == sorted(names)
    assert data["elapsed_ms"] is None


def test_reports_are_deterministic():
    cfg = SuiteConfig(samples=30, seed=7)
    a = json.dumps(run_suite("prop2.6", cfg).to_json())
    b = json.dumps(run_suite("prop2.6", cfg).to_json())
    assert a == b


def test_seed_changes_samples():
    a = run_suite("thm2.8", SuiteConfig(samples=5, seed=0)).to_json()
    b = run_suite("thm2.8", SuiteConfig(samples=5, seed=1)).to_json()
    assert a["cases"] != b["cases"]


def test_corrupted_entry_stops_at_validation():
    data = catalog.save(catalog.get("scalar"))
    data["pair"]["tplus"] = [[[["3"]]]]
    entry = catalog.load(data, validate_entry=False)
    report = run_suite("jordan-identities", SuiteConfig(entry=entry))
    assert not report.ok
    assert [c.name for c in report.cases] == ["validate-entry"]


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("thm9.9")
