import json

from run_audit import EXIT_BUDGET, EXIT_CAP, EXIT_OK, EXIT_PARAMETER, EXIT_PARSE, EXIT_USAGE, main


def test_build_family_prints_order(capsys):
    assert main(["build", "--family", "MpMN", "--p", "3", "--m", "2", "--n", "1"]) == EXIT_OK
    assert "order 27" in capsys.readouterr().out


def test_build_rejects_out_of_range_parameters():
    assert main(["build", "--family", "MpMN", "--p", "3", "--m", "1", "--n", "1"]) == EXIT_PARAMETER


def test_build_json_reports_derived_parameters(capsys):
    assert main(["build", "--family", "A2Type16", "--p", "3", "--m", "1", "--r", "1", "--json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["label"] == "A2Type16:p=3,m=1,r=1"
    assert payload["derived"] == {"rho": 2, "j": 2}


def test_build_writes_presentation_file(tmp_path, capsys):
    out = tmp_path / "q8.grp"
    assert main(["build", "--family", "Q8", "--out", str(out)]) == EXIT_OK
    assert out.read_text().startswith("# Q8\n")
    assert main(["build", str(out)]) == EXIT_OK
    assert "order 8" in capsys.readouterr().out


def test_parse_error_exit_code(tmp_path):
    path = tmp_path / "broken.grp"
    path.write_text("gens a;\nrels a^2 = ;\n")
    assert main(["build", str(path)]) == EXIT_PARSE


def test_budget_exit_code(tmp_path):
    path = tmp_path / "free_abelian.grp"
    path.write_text("gens a,b; rels [a,b]=1;\n")
    assert main(["build", str(path), "--max-cosets", "100"]) == EXIT_BUDGET


def test_lattice_cap_exit_code():
    assert main(["lattice", "--family", "Dihedral", "--n", "16", "--max-order", "8"]) == EXIT_CAP


def test_lattice_json_lists_subgroups(capsys):
    assert main(["lattice", "--family", "Q8", "--json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert len(payload["subgroups"]) == 6
    assert [row["order"] for row in payload["subgroups"]][-1] == 8


def test_classify_text_output(capsys):
    assert main(["classify", "--family", "Dihedral", "--n", "16"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "a_degree: 2" in out
    assert "metahamiltonian: True" in out


def test_classify_needs_exactly_one_source(tmp_path):
    assert main(["classify"]) == EXIT_USAGE
    path = tmp_path / "c2.grp"
    path.write_text("gens a; rels a^2=1;\n")
    assert main(["classify", str(path), "--family", "Q8"]) == EXIT_USAGE


def test_invalid_setting_exit_code():
    assert main(["build", "--family", "Q8", "--max-cosets", "0"]) == EXIT_USAGE
    assert EXIT_USAGE != EXIT_PARSE


def test_verify_on_empty_corpus_dir(tmp_path):
    out = tmp_path / "report.json"
    assert main(["verify", "--corpus-dir", str(tmp_path), "--out", str(out)]) == EXIT_OK
    report = json.loads(out.read_text())
    assert report["reports"] == []
    assert report["meta"]["corpus_size"] == 0


def test_verify_with_suite_filter(tmp_path, capsys):
    (tmp_path / "d16.grp").write_text("gens r,s; rels r^8=s^2=1, r^s=r^-1;\n")
    out = tmp_path / "report.json"
    code = main(["verify", "--corpus-dir", str(tmp_path), "--suite", "T3.4", "--out", str(out), "--json"])
    assert code == EXIT_OK
    report = json.loads(out.read_text())
    assert [(r["label"], r["theorem"], r["verdict"]) for r in report["reports"]] == [("d16", "T3.4", "holds")]
    assert (tmp_path / "summary.csv").exists()


def test_verify_writes_into_named_directory(tmp_path):
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    (corpus / "q8.grp").write_text("gens a,b; rels a^4=1, b^2=a^2, a^b=a^-1;\n")
    out = tmp_path / "reports"
    assert main(["verify", "--corpus-dir", str(corpus), "--suite", "T3.4", "--out", str(out)]) == EXIT_OK
    assert (out / "report.json").exists()
    assert (out / "summary.csv").exists()
