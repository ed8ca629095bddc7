import pytest

from deltaq.cache import KFCache
from deltaq.verify import IDENTITIES, VerifyReport, run_identity

from oracles import lemma33_instance_count

REQUIRED = {
    "theorem-1-2", "theorem-4-2", "lemma-2-3", "lemma-3-1", "lemma-3-2", "lemma-3-3",
    "lemma-4-1", "prop-5-1", "prop-5-2", "simple-2", "degree-claim", "positivity",
    "osp-vs-qprime", "shuffle-inner", "adjointness",
}


def test_registry_covers_every_identity():
    assert REQUIRED <= set(IDENTITIES)


def test_theorem42_small_sweep():
    report = run_identity("theorem-4-2", max_n=5)
    assert report.passed
    assert report.instances_checked == 15


def test_lemma33_count():
    report = run_identity("lemma-3-3", max_n=6)
    assert report.passed
    assert report.instances_checked == lemma33_instance_count(6)


def test_theorem12_small_sweep():
    assert run_identity("theorem-1-2", max_m=2, max_n=3).passed


@pytest.mark.parametrize("name", sorted(REQUIRED - {"lemma-3-2", "theorem-4-2", "shuffle-inner"}))
def test_every_identity_passes_small(name):
    report = run_identity(name, max_n=4, max_m=2, max_j=3)
    assert report.passed, report.failures[:3]
    assert report.instances_checked > 0


def test_lemma32_records_winning_form():
    report = run_identity("lemma-3-2", max_j=1)
    assert report.passed
    assert report.details["identified_form"] == "x_form"


def test_report_json_shape():
    report = run_identity("adjointness", max_n=2)
    data = report.to_json()
    assert data["identity"] == "adjointness"
    assert data["passed"] is True
    assert data["failures"] == []
    assert data["bounds"] == {"max_n": 2}


def test_failing_report():
    report = VerifyReport("x", 2, [{"instance": [[1], 2], "diff": "d"}], 0.0)
    assert not report.passed
    assert report.to_json()["failures"][0]["instance"] == [[1], 2]


def test_negative_bound_rejected():
    with pytest.raises(ValueError):
        run_identity("theorem-4-2", max_n=-1)


def test_parallel_matches_serial_and_fills_cache():
    serial = run_identity("theorem-1-2", max_m=3, max_n=4)
    cache = KFCache()
    parallel = run_identity("theorem-1-2", max_m=3, max_n=4, jobs=2, kf_store=cache)
    assert serial.instances_checked == parallel.instances_checked
    assert serial.failures == parallel.failures
    assert len(cache) > 0
