import multiprocessing
import time

import pytest
from pydantic import ValidationError

from audit import (
    THEOREM_IDS, TheoremReport, Witness, audit_in_subprocess, recheck_witness, resolve_suite_filter, run_all,
    suite_a1_characterization, suite_a2_catalogue, suite_class_bound, suite_elem_abelian_derived,
    suite_metacyclic, suite_normal_closure, suite_prelim, suite_sections, summarize,
)
from classifiers import classify
from kernel import direct_product
from families import CorpusEntry, standard_corpus
from utils import AuditSettings
from tests.helpers import family_group


def by_theorem(reports, theorem):
    (report,) = [r for r in reports if r.theorem == theorem]
    return report


def test_structure_suites_hold_on_d16(d16):
    assert suite_sections(d16).verdict == "holds"
    assert suite_normal_closure(d16).verdict == "holds"
    assert suite_class_bound(d16).verdict == "holds"
    assert suite_metacyclic(d16).verdict == "holds"


def test_metacyclic_suite_needs_two_generators(q8xc2):
    assert suite_metacyclic(q8xc2).verdict == "not-applicable"


def test_non_metahamiltonian_group_is_out_of_scope(d32):
    assert suite_sections(d32).verdict == "not-applicable"
    assert suite_class_bound(d32).verdict == "not-applicable"
    assert suite_a1_characterization(d32).verdict == "holds"


def test_elementary_abelian_derived_suites(d8, d16):
    reports = suite_elem_abelian_derived(d8)
    assert {r.theorem for r in reports} == {"L3.7", "T3.8", "C3.9"}
    assert all(r.verdict != "fails" for r in reports)
    # D16 has cyclic derived subgroup of order 4
    assert all(r.verdict == "not-applicable" for r in suite_elem_abelian_derived(d16))


def test_prelim_suites(m3_111, q8, d16, s3):
    assert by_theorem(suite_prelim(m3_111), "T2.2").verdict == "holds"
    assert by_theorem(suite_prelim(q8), "L2.3").verdict == "holds"
    assert by_theorem(suite_prelim(d16), "L2.7").verdict == "holds"
    non_p = suite_prelim(s3)
    assert by_theorem(non_p, "T2.2").verdict == "not-applicable"
    assert by_theorem(non_p, "T2.6").verdict != "error"


def test_a2_catalogue_matches_type8():
    assert suite_a2_catalogue(family_group("A2Type8")).verdict == "holds"


def test_a2_catalogue_skips_unlabelled_groups(q8xc2):
    assert suite_a2_catalogue(q8xc2).verdict == "not-applicable"


def test_recheck_fabricated_witness(d32):
    words = classify(d32).metahamiltonian_witness
    report = TheoremReport(
        theorem="T3.1",
        label=d32.label,
        verdict="fails",
        witness=Witness(kind="non-metahamiltonian-subgroup", subgroup=list(d32.generator_names), elements=words),
    )
    assert recheck_witness(d32, report)


def test_recheck_rejects_bogus_witness(d16):
    report = TheoremReport(
        theorem="T3.1",
        label=d16.label,
        verdict="fails",
        witness=Witness(kind="non-metahamiltonian-subgroup", subgroup=list(d16.generator_names), elements=["s"]),
    )
    assert not recheck_witness(d16, report)
    assert not recheck_witness(d16, suite_sections(d16))


def test_failing_report_needs_witness():
    with pytest.raises(ValidationError):
        TheoremReport(theorem="T3.4", label="x", verdict="fails")


def test_suite_filter_order_and_unknown_ids():
    assert resolve_suite_filter(None) == list(THEOREM_IDS)
    assert resolve_suite_filter(["T3.4", "T2.2"]) == ["T2.2", "T3.4"]
    with pytest.raises(ValueError):
        resolve_suite_filter(["T9.9"])


def test_summarize_counts_every_verdict():
    reports = [
        TheoremReport(theorem="T3.4", label="a", verdict="holds"),
        TheoremReport(theorem="T3.4", label="b", verdict="not-applicable"),
        TheoremReport(theorem="T2.2", label="a", verdict="holds"),
    ]
    summary = summarize(reports)
    assert summary["T3.4"] == {"holds": 1, "fails": 0, "not-applicable": 1, "error": 0}
    assert summary["T2.2"]["holds"] == 1
    assert summarize([]) == {}


def test_empty_corpus_gives_empty_report():
    report = run_all([])
    assert report.reports == []
    assert report.summary == {}
    assert report.meta.corpus_size == 0
    assert not report.has_failures()


def test_small_corpus_has_no_failures():
    corpus = standard_corpus({2: 8})
    report = run_all(corpus, corpus_caps={2: 8})
    assert len(report.reports) == len(corpus) * len(THEOREM_IDS)
    assert not report.has_failures()
    assert report.meta.corpus_caps == {"2": 8}


def test_default_corpus_has_no_failing_statements():
    caps = AuditSettings().corpus_caps
    report = run_all(standard_corpus(caps), jobs=4, corpus_caps=caps)
    assert report.reports
    failing = [(r.label, r.theorem) for r in report.reports if r.verdict == "fails"]
    assert failing == []


def test_suite_filter_limits_reports(d16):
    report = run_all([CorpusEntry("D16", d16)], ["T3.4"])
    assert [(r.label, r.theorem) for r in report.reports] == [("D16", "T3.4")]
    assert report.meta.suite_filter == ["T3.4"]


def test_report_is_identical_across_job_counts():
    corpus = standard_corpus({2: 8})
    serial = run_all(corpus, jobs=1)
    parallel = run_all(corpus, jobs=2)
    assert serial.model_dump_json() == parallel.model_dump_json()


def test_timeout_becomes_error_report(d32):
    report = run_all([CorpusEntry("D32", d32)], ["T3.2"], timeout=1e-6)
    assert [r.verdict for r in report.reports] == ["error"]
    assert "timed out" in report.reports[0].message
    assert report.has_failures()


def huge_lattice_group(d8):
    return direct_product(family_group("ElemAbelianPower", n=2, m=6), d8, label="C2^6xD8")


def test_timed_out_worker_is_terminated(d8):
    slow = CorpusEntry("C2^6xD8", huge_lattice_group(d8))
    start = time.perf_counter()
    with pytest.raises(TimeoutError):
        audit_in_subprocess(slow, list(THEOREM_IDS), 1024, timeout=0.05)
    assert time.perf_counter() - start < 5
    assert multiprocessing.active_children() == []


def test_slow_group_does_not_hold_up_the_run(d8):
    corpus = [CorpusEntry("C2^6xD8", huge_lattice_group(d8)), CorpusEntry("D8", d8)]
    start = time.perf_counter()
    report = run_all(corpus, ["T3.4"], timeout=1.0)
    assert time.perf_counter() - start < 15
    verdicts = {r.label: r.verdict for r in report.reports}
    assert verdicts == {"C2^6xD8": "error", "D8": "holds"}
    assert multiprocessing.active_children() == []
