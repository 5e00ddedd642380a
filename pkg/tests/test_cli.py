"""Pipeline orchestration: configs, reports, suites, CLI surface."""

import json

import pytest

from petcoh.cli import (
    CHECK_ORDER,
    DEFAULT_SUITE,
    RunConfig,
    WORD_CAP_ENV,
    expected_equivariant_series,
    main,
    run_certification,
    run_suite,
)
from petcoh.report import strip_timing


def test_run_config_validation():
    RunConfig(lie_type="A1")
    with pytest.raises(ValueError):
        RunConfig(lie_type="A1", cutoff_degree=5)
    with pytest.raises(ValueError):
        RunConfig(lie_type="A1", cutoff_degree=-2)
    with pytest.raises(ValueError):
        RunConfig(lie_type="A1", checks=("nope",))
    with pytest.raises(ValueError):
        RunConfig(lie_type="A1", output_format="yaml")


def test_certification_A1_all_checks():
    report = run_certification(RunConfig(lie_type="A1"))
    assert report.overall_pass
    assert report.isomorphism_certified()
    by_name = {r.check: r for r in report.records}
    assert set(by_name) == set(CHECK_ORDER)
    hilbert = by_name["hilbert"]
    assert hilbert.witnesses["equivariant_series"] == \
        expected_equivariant_series(1).to_json()
    assert hilbert.witnesses["equivariant_series"] == {
        "numerator_coeffs": [1, 0, 1],
        "denominator_coeffs": [1, 0, -1],
    }


def test_certification_G2_monk_cross_check():
    report = run_certification(RunConfig(lie_type="G2", checks=("monk",)))
    assert report.overall_pass
    cross = report.records[0].witnesses["cartan_cross_check"]
    coeffs = {(item["i"], item["j"]): item["coefficient"] for item in cross}
    assert coeffs == {(1, 2): 1, (2, 1): 3}


def test_empty_check_set_is_trivially_passing():
    report = run_certification(RunConfig(lie_type="A2", checks=()))
    assert report.records == []
    assert report.overall_pass
    assert not report.isomorphism_certified()  # no legs ran


def test_checks_run_in_dependency_order():
    config = RunConfig(lie_type="A2",
                       checks=("zero_set", "quadratic", "hilbert"))
    report = run_certification(config)
    assert [r.check for r in report.records] == \
        ["quadratic", "hilbert", "zero_set"]


def test_suite_of_one_type_matches_single_run():
    config = RunConfig(lie_type="B2")
    single = strip_timing(run_certification(config).to_dict())
    suite = run_suite(["B2"], config)
    assert strip_timing(suite["types"][0]) == single
    assert suite["overall_pass"]


def test_suite_includes_semisimple_disconnected_products():
    suite = run_suite(["A2+A1"], RunConfig(lie_type="A1"))
    entry = suite["types"][0]
    assert entry["overall_pass"]
    giambelli = next(c for c in entry["checks"] if c["check"] == "giambelli")
    assert giambelli["parameters"]["disconnected_pairs"] >= 1


def test_suite_isolates_type_failures():
    suite = run_suite(["A1", "Z9"], RunConfig(lie_type="A1"))
    assert not suite["overall_pass"]
    assert suite["types"][0]["overall_pass"]
    assert "error" in suite["types"][1]


def test_report_determinism():
    config = RunConfig(lie_type="A2")
    one = json.dumps(strip_timing(run_certification(config).to_dict()),
                     sort_keys=True)
    two = json.dumps(strip_timing(run_certification(config).to_dict()),
                     sort_keys=True)
    assert one == two


def test_concurrent_suite_matches_sequential():
    names = ["A2", "B2", "G2"]
    sequential = run_suite(names, RunConfig(lie_type="A1"))
    concurrent = run_suite(names, RunConfig(lie_type="A1"), workers=3)
    assert strip_timing(sequential) == strip_timing(concurrent)


def test_word_cap_skip_is_explicit(monkeypatch):
    # a cap of 2 blocks the well-definedness sweep of A2 (w0 has length 3)
    # but leaves the algebraic checks runnable
    config = RunConfig(lie_type="A2", reduced_word_cap=2)
    report = run_certification(config)
    by_name = {r.check: r for r in report.records}
    assert by_name["billey_welldef"].skipped
    assert "skip_reason" in by_name["billey_welldef"].witnesses
    assert by_name["quadratic"].passed
    assert by_name["hilbert"].passed
    assert report.overall_pass  # skips are reported, not failed
    assert report.has_skips


def test_env_var_word_cap(monkeypatch, capsys, tmp_path):
    monkeypatch.setenv(WORD_CAP_ENV, "2")
    out = tmp_path / "report.json"
    code = main(["certify", "--type", "A2", "--format", "json",
                 "--out", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["config"]["reduced_word_cap"] == 2
    welldef = next(c for c in payload["checks"]
                   if c["check"] == "billey_welldef")
    assert welldef["skipped"] is True


def test_main_certify_exit_code_and_json(tmp_path):
    out = tmp_path / "g2.json"
    code = main(["certify", "--type", "G2", "--checks", "all",
                 "--format", "json", "--out", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["overall_pass"] is True
    assert payload["isomorphism_certified"] is True
    assert payload["lie_type"] == "G2"
    assert payload["schema_version"] == 1


def test_main_text_output(capsys):
    code = main(["certify", "--type", "A1", "--checks", "quadratic,hilbert"])
    assert code == 0
    captured = capsys.readouterr().out
    assert "[PASS] quadratic" in captured
    assert "[PASS] hilbert" in captured
    assert "overall: PASS" in captured


def test_main_suite_subset(tmp_path):
    out = tmp_path / "suite.json"
    code = main(["suite", "--types", "A1,G2", "--format", "json",
                 "--out", str(out)])
    assert code == 0
    payload = json.loads(out.read_text())
    assert [t["lie_type"] for t in payload["types"]] == ["A1", "G2"]
    assert payload["overall_pass"] is True


def test_main_rejects_unknown_check():
    with pytest.raises(SystemExit):
        main(["certify", "--type", "A1", "--checks", "bogus"])


def test_default_suite_contents():
    assert DEFAULT_SUITE == ("A1", "A2", "A3", "A4", "B2", "B3", "C3",
                             "D4", "F4", "G2")
