import json


from btquot.cli import run


def test_unknown_subcommand_is_usage_error(capsys):
    assert run(["frobnicate"]) == 2
    assert "usage" in capsys.readouterr().err


def test_bad_parameters_are_usage_errors(capsys):
    assert run(["rootsys", "show", "--type", "Q7"]) == 2
    assert run(["building", "quotient", "--n", "3", "--q", "3", "--radius", "5"]) == 2
    assert run(["ffield", "rr", "--q", "3", "--degJ", "9", "--m", "1"]) == 2


def test_rootsys_json(capsys):
    assert run(["rootsys", "show", "--type", "G2", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["family"] == "G" and data["rank"] == 2 and len(data["positive_roots"]) == 6


def test_subsets_verify_e8(capsys):
    assert run(["subsets", "verify", "--type", "E8"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "subset,check,result" and "psi_basis,C1,pass" in out


def test_subsets_all_theta(capsys):
    assert run(["subsets", "verify", "--type", "B3", "--all-theta"]) == 0
    assert "psi_theta{1 3},W_Theta-stable,pass" in capsys.readouterr().out


def test_chevalley_constants_csv(capsys):
    assert run(["chevalley", "constants", "--type", "B2", "--csv"]) == 0
    rows = capsys.readouterr().out.splitlines()
    assert rows[0] == "alpha,beta,r,s,c"
    assert any(r.startswith("0 1,1 1,1,1,") and r.split(",")[-1] in ("2", "-2") for r in rows)


def test_conj_table(capsys):
    assert run(["chevalley", "conj-table", "--type", "A3", "--psi", "basis"]) == 0
    assert json.loads(capsys.readouterr().out)["triangular"] is True


def test_apartment_commands(capsys):
    assert run(["apartment", "corners", "--type", "A2", "--tip", "1/2,1/2", "--theta", ""]) == 0
    assert json.loads(capsys.readouterr().out) == {"corners": [["0", "1"], ["1", "0"]]}
    assert run(["apartment", "fixed", "--type", "A2", "--word", "1", "--x", "0,1/3"]) == 0
    assert json.loads(capsys.readouterr().out)["e"] == 6


def test_ffield_commands(capsys):
    assert run(["ffield", "rr", "--q", "3", "--degJ", "2", "--m", "5"]) == 0
    assert capsys.readouterr().out.strip() == "4"
    assert run(["ffield", "factor", "--q", "2", "--poly", "t^3+1"]) == 0
    assert capsys.readouterr().out.strip() == "(t + 1) * (t^2 + t + 1)"


def test_ideals_sandwich_from_file(tmp_path, capsys):
    h = tmp_path / "h.json"
    h.write_text(json.dumps([["0", "0", "1"], ["0", "-1", "0"], ["1", "0", "0"]]))
    assert run(["ideals", "sandwich", "--n", "3", "--q", "2", "--h-file", str(h), "--alpha", "1,3"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["lower_ok"] and rep["upper_ok"] and rep["lower"] == "1"


def test_building_quotient_dot(tmp_path):
    out = tmp_path / "q.dot"
    assert run(["building", "quotient", "--n", "2", "--q", "2", "--radius", "6", "--emit", "dot", str(out)]) == 0
    text = out.read_text()
    assert text.startswith("graph quotient {")
    assert sum(1 for line in text.splitlines() if line.strip().endswith(";") and "--" not in line) == 7


def test_building_cusps(capsys):
    assert run(["building", "cusps", "--genus", "1", "--curve", "0,0,0,1,0", "--q", "5", "--rank", "2"]) == 0
    assert json.loads(capsys.readouterr().out)["cusps"] == 16


def test_verify_is_deterministic(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    codes = [run(["verify", "1,4,10,11", "--seed", "7", "--out", str(p)]) for p in (a, b)]
    assert codes == [0, 0]
    assert a.read_bytes() == b.read_bytes()
    assert a.read_text().splitlines()[0] == "criterion,check,result"


def test_verify_reports_failures():
    # criterion 3 contains a clause that is false as stated
    assert run(["verify", "3"]) == 1
