import json

from ybe.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_theorem_p4(capsys):
    code, out, _ = run(capsys, "theorem", "--catalog", "P4")
    assert code == 0
    assert "cond1: yes" in out and "cond2: yes" in out and "cond3: yes" in out
    assert "equivalent: yes" in out


def test_theorem_json_schema(capsys):
    code, out, _ = run(capsys, "--json", "theorem", "--catalog", "P4")
    assert code == 0
    data = json.loads(out)
    assert data["size"] == 4
    assert data["group_order"] == 8
    assert data["ideal_sizes"] == [1, 4, 8]
    assert data["theorem"]["cond1"] is True
    assert data["theorem"]["equivalent"] is True


def test_enumerate_two_simple_only(capsys):
    code, out, _ = run(capsys, "enumerate", "2", "--simple-only", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 2
    assert all(entry["simple"] for entry in data["cycle_sets"])


def test_enumerate_guard_is_usage_error(capsys):
    code, _, err = run(capsys, "enumerate", "9")
    assert code == 2
    assert "guard" in err


def test_classify_c7_prime_branch(capsys):
    code, out, _ = run(capsys, "classify", "--catalog", "C_7")
    assert code == 0
    assert "classification: prime" in out
    assert "simple: yes" in out


def test_classify_file_input(tmp_path, capsys):
    f = tmp_path / "triv.cs"
    f.write_text("n 3\nsigma 1 := ()\nsigma 2 := ()\nsigma 3 := ()\n")
    code, out, _ = run(capsys, "classify", str(f))
    assert code == 0
    assert "simple: no" in out


def test_validate_good_and_bad(tmp_path, capsys):
    good = tmp_path / "good.cs"
    good.write_text("n 2\nsigma 1 := (1,2)\nsigma 2 := (1,2)\n")
    code, out, _ = run(capsys, "validate", str(good))
    assert code == 0 and "valid: yes" in out

    bad = tmp_path / "bad.cs"
    bad.write_text("n 2\nsigma 1 := ()\nsigma 2 := (1,2)\n")
    code, _, err = run(capsys, "validate", str(bad))
    assert code == 1
    assert "not a cycle set" in err


def test_validate_missing_file(capsys):
    code, _, err = run(capsys, "validate", "/nonexistent/x.cs")
    assert code == 1 and "cannot read" in err


def test_usage_errors(capsys):
    assert run(capsys, "no-such-command")[0] == 2
    assert run(capsys)[0] == 2
    # both input sources at once
    assert run(capsys, "analyze", "file.cs", "--catalog", "P4")[0] == 2
    # neither
    assert run(capsys, "analyze")[0] == 2


def test_analyze_catalog_cyclic(capsys):
    code, out, _ = run(capsys, "--json", "analyze", "--catalog", "C_5")
    assert code == 0
    data = json.loads(out)
    assert data["retraction_tower"] == [5, 1]
    assert data["multipermutation_level"] == 1
    assert data["simple_oracle"] is True
    assert data["irretractable"] is False


def test_brace_subcommand(capsys):
    code, out, _ = run(capsys, "--json", "brace", "--catalog", "E12b")
    assert code == 0
    data = json.loads(out)
    assert data["group_order"] == 48
    assert data["ideal_sizes"] == [1, 24, 48]
    assert data["minimal_ideal_sizes"] == [24]
    assert data["socle_size"] == 1


def test_catalog_list_and_show(capsys):
    code, out, _ = run(capsys, "--json", "catalog", "list")
    assert code == 0
    data = json.loads(out)
    assert [e["id"] for e in data["entries"]][:2] == ["P4", "E12a"]

    code, out, _ = run(capsys, "--json", "catalog", "show", "P4")
    assert code == 0
    data = json.loads(out)
    assert data["expected"]["group_order"] == 8

    code, _, err = run(capsys, "catalog", "show")
    assert code == 2

    code, _, err = run(capsys, "catalog", "show", "nope")
    assert code == 1


def test_convert_round_trip(tmp_path, capsys):
    f = tmp_path / "c3.cs"
    f.write_text("n 3\nsigma 1 := (1,2,3)\nsigma 2 := (1,2,3)\nsigma 3 := (1,2,3)\n")
    code, sol, _ = run(capsys, "convert", str(f), "--to", "solution")
    assert code == 0 and sol.startswith("n 3\nlambda 1 := (1,3,2)")
    g = tmp_path / "c3.sol"
    g.write_text(sol)
    code, back, _ = run(capsys, "convert", str(g), "--to", "cycleset")
    assert code == 0
    assert back == f.read_text()


def test_convert_rejects_unknown_format(tmp_path, capsys):
    f = tmp_path / "junk.txt"
    f.write_text("n 2\nwhat 1 := ()\n")
    code, _, err = run(capsys, "convert", str(f), "--to", "solution")
    assert code == 1


def test_analyze_singleton_reports_not_simple(tmp_path, capsys):
    f = tmp_path / "one.cs"
    f.write_text("n 1\nsigma 1 := ()\n")
    code, out, _ = run(capsys, "--json", "analyze", str(f))
    assert code == 0
    data = json.loads(out)
    assert data["size"] == 1
    assert data["simple_oracle"] is False
    assert data["multipermutation_level"] == 0


def test_byte_identical_reruns(capsys):
    a = run(capsys, "--json", "theorem", "--catalog", "E12a")
    b = run(capsys, "--json", "theorem", "--catalog", "E12a")
    assert a == b
    c = run(capsys, "enumerate", "3", "--up-to-iso")
    d = run(capsys, "enumerate", "3", "--up-to-iso")
    assert c == d
