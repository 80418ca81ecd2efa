import json

from contactlie.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code = main(["--json", *argv])
    out = capsys.readouterr().out
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert doc["exit_code"] == code
    return code, doc


def test_validate_catalog_entry(capsys):
    code, out = run(capsys, "validate", "heisenberg3")
    assert code == 0
    assert "dim 3" in out and "jacobi: ok" in out


def test_validate_file(capsys, tmp_path):
    p = tmp_path / "a.json"
    p.write_text('{"name": "r2", "dim": 2, "brackets": []}')
    code, doc = run_json(capsys, "validate", str(p))
    assert code == 0 and doc["dim"] == 2


def test_validate_input_error(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"name": "bad", "dim": 2, "brackets": [{"i": 0, "j": 5,'
                 ' "terms": []}]}')
    code, doc = run_json(capsys, "validate", str(p))
    assert code == 2 and "error" in doc


def test_unknown_input(capsys):
    code, out = run(capsys, "validate", "no_such_entry")
    assert code == 2
    assert "catalog" in out


def test_contact_check_verdicts(capsys):
    code, doc = run_json(capsys, "contact-check", "heisenberg3")
    assert code == 0 and doc["contact"] is True
    assert doc["top_coefficient"] == "-1/2"


def test_contact_check_false(capsys, tmp_path):
    p = tmp_path / "abelian3.json"
    p.write_text('{"name": "r3", "dim": 3, "brackets": [],'
                 ' "forms": {"eta": ["0", "0", "1"]}}')
    code, doc = run_json(capsys, "contact-check", str(p))
    assert code == 1 and doc["contact"] is False
    assert doc["top_coefficient"] == "0"


def test_reeb(capsys):
    code, doc = run_json(capsys, "reeb", "heisenberg5")
    assert code == 0 and doc["reeb"] == ["0", "0", "0", "0", "1"]
    code, out = run(capsys, "reeb", "nilpotent_nondiag5")
    assert code == 0 and "1/3 y + 2/3 u" in out


def test_reeb_missing_form(capsys):
    code, doc = run_json(capsys, "reeb", "r4_sympl")
    assert code == 2


def test_analyze_exact_metric(capsys):
    code, doc = run_json(capsys, "analyze", "heisenberg5")
    assert code == 0
    assert doc["kcontact"] is True and doc["ad_xi_zero"] is True
    assert doc["quotient_dim"] == 4


def test_analyze_auto_metric(capsys):
    code, doc = run_json(capsys, "analyze", "heisenberg5", "--auto-metric")
    assert code == 0 and doc["kcontact"] is True
    assert "floating" in doc["metric"]


def test_analyze_not_kcontact(capsys):
    code, doc = run_json(capsys, "analyze", "sl2r")
    assert code == 1 and doc["kcontact"] is False


def test_analyze_missing_metric(capsys):
    code, doc = run_json(capsys, "analyze", "nilpotent_nondiag5")
    assert code == 2


def test_roots_sl2r(capsys):
    code, doc = run_json(capsys, "roots", "sl2r")
    assert code == 0 and doc["exact"] is True
    assert [r["root"] for r in doc["roots"]] == ["-1,0", "0,0", "1,0"]
    assert doc["obstruction"]


def test_roots_su2(capsys):
    code, doc = run_json(capsys, "roots", "su2")
    assert [r["root"] for r in doc["roots"]] == ["0,-1", "0,0", "0,1"]
    assert doc["obstruction"] is None


def test_roots_nondiagonalizable(capsys):
    code, doc = run_json(capsys, "roots", "nilpotent_nondiag5")
    assert code == 2


def test_quotient_and_extend_round_trip(capsys, tmp_path):
    q = tmp_path / "quot.json"
    code, doc = run_json(capsys, "quotient", "heisenberg5", "-o", str(q))
    assert code == 0 and doc["quotient_dim"] == 4
    ext = tmp_path / "ext.json"
    code, doc = run_json(capsys, "extend", str(q), "-o", str(ext))
    assert code == 0 and doc["extension_dim"] == 5
    code, doc = run_json(capsys, "contact-check", str(ext))
    assert code == 0 and doc["contact"] is True


def test_quotient_noncentral_reeb(capsys, tmp_path):
    code, doc = run_json(capsys, "quotient", "su2", "-o",
                         str(tmp_path / "x.json"))
    assert code == 2 and "central" in doc["error"]


def test_extend_symplectic_entry(capsys, tmp_path):
    out = tmp_path / "e.json"
    code, doc = run_json(capsys, "extend", "aff1_aff1_sympl", "-o",
                         str(out))
    assert code == 0 and doc["extension_dim"] == 5


def test_normal_form(capsys, tmp_path):
    p = tmp_path / "skew.json"
    p.write_text(json.dumps([[0, 2.5, 0], [-2.5, 0, 0], [0, 0, 0]]))
    code, doc = run_json(capsys, "normal-form", "--skew-matrix", str(p))
    assert code == 0
    assert abs(doc["blocks"][0] - 2.5) < 1e-10 and doc["zero_count"] == 1


def test_normal_form_rejects_nonskew(capsys, tmp_path):
    p = tmp_path / "m.json"
    p.write_text(json.dumps([[1, 0], [0, 1]]))
    code, doc = run_json(capsys, "normal-form", "--skew-matrix", str(p))
    assert code == 2


def test_catalog_list(capsys):
    code, doc = run_json(capsys, "catalog", "list")
    assert code == 0
    names = [e["name"] for e in doc["entries"]]
    assert names == sorted(names)
    assert "heisenberg3" in names and len(names) == 10


def test_catalog_show(capsys):
    code, doc = run_json(capsys, "catalog", "show", "sl2r")
    assert code == 0
    assert doc["obstruction"] and "imaginary" in doc["obstruction"]
    code, doc = run_json(capsys, "catalog", "show", "nilpotent_nondiag5")
    assert "squarefree" in doc["obstruction"]
    code, doc = run_json(capsys, "catalog", "show", "heisenberg5")
    assert doc["reeb"] == ["0", "0", "0", "0", "1"]
    assert doc["obstruction"] is None
    code, doc = run_json(capsys, "catalog", "show", "r4_sympl")
    assert doc["omega"] == [[0, 1, "1"], [2, 3, "1"]]


def test_catalog_show_unknown(capsys):
    code, doc = run_json(capsys, "catalog", "show", "nope")
    assert code == 2


def test_json_determinism(capsys):
    _, first = run(capsys, "--json", "analyze", "heisenberg7")
    _, second = run(capsys, "--json", "analyze", "heisenberg7")
    assert first == second
