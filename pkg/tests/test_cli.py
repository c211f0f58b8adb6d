import json
import subprocess
import sys


from fwburnside.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_group_json_shape(capsys):
    code, out, err = run_cli(capsys, "group", "S3")
    assert code == 0 and err == ""
    payload = json.loads(out)
    assert payload == {
        "spec": "S3",
        "label": "S3",
        "order": 6,
        "abelian": False,
        "exponent": 6,
        "center_order": 1,
        "element_order_counts": {"1": 1, "2": 3, "3": 2},
    }


def test_lattice_json(capsys):
    code, out, _ = run_cli(capsys, "lattice", "Q8")
    assert code == 0
    payload = json.loads(out)
    assert payload["subgroup_count"] == 6
    assert payload["class_count"] == 6
    assert payload["frattini"] == "2:0"
    assert payload["max_cyclic_intersection"] == "2:0"
    assert [c["label"] for c in payload["classes"]] == [
        "1:0", "2:0", "4:0", "4:1", "4:2", "8:0",
    ]


def test_marks_table_s3(capsys):
    code, out, _ = run_cli(capsys, "marks", "S3", "--format", "table")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["class", "1:0", "2:0", "3:0", "6:0"]
    assert lines[1].split() == ["1:0", "6", "0", "0", "0"]
    assert lines[4].split() == ["6:0", "1", "1", "1", "1"]


def test_marks_csv(capsys):
    code, out, _ = run_cli(capsys, "marks", "C6", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "class,1:0,2:0,3:0,6:0"


def test_idempotents_resolve(capsys):
    code, out, _ = run_cli(capsys, "idempotents", "S3")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["idempotents"]) == 4


def test_mconst(capsys):
    code, out, _ = run_cli(capsys, "mconst", "Q8", "order=8:0", "center")
    assert code == 0
    assert json.loads(out)["m"] == "1/1"


def test_op_inflate_then_deflate_roundtrip(capsys):
    elem = json.dumps([["2:0", "3/2"], ["1:0", "-1/1"]])
    code, out, _ = run_cli(capsys, "op", "inf", "Q8", "center", elem)
    assert code == 0
    inflated = json.dumps(json.loads(out)["element"])
    code, out, _ = run_cli(capsys, "op", "def", "Q8", "center", inflated)
    assert code == 0
    assert json.loads(out)["element"] == [["1:0", "-1/1"], ["2:0", "3/2"]]


def test_op_selectors(capsys):
    # all four selectors resolve to the center of Q8
    for sel in ("center", "frattini", "maxcyc", "order=2:0"):
        code, out, _ = run_cli(capsys, "op", "fix", "Q8", sel, "[]")
        assert code == 0
        assert json.loads(out)["group"] == "Q8/2@0"


def test_fw_apply_identity(capsys):
    code, out, _ = run_cli(capsys, "fw", "apply", "Q8", '[["8:0", "1/1"]]')
    assert code == 0
    payload = json.loads(out)
    assert payload["source"] == "C8"
    assert payload["element"] == [["8:0", "1/1"]]


def test_fw_check_commuting(capsys):
    code, out, _ = run_cli(capsys, "fw", "check", "Q8", "--op", "def", "--sub", "center")
    assert code == 0
    payload = json.loads(out)
    assert payload["commutes"] is True
    assert payload["certificate"] is None


def test_fw_check_counterexample(capsys):
    code, out, _ = run_cli(
        capsys, "fw", "check", "C2xC2", "--op", "def", "--sub", "order=2:0"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["commutes"] is False
    assert payload["certificate"]["basis"] == "e[2]"
    assert payload["certificate"]["left"] == "-1/4[C2/1:0] + [C2/2:0]"
    assert payload["certificate"]["right"] == "1/4[C2/1:0]"


def test_fw_survey_default_catalog_row(capsys, tmp_path):
    catalog = tmp_path / "catalog.txt"
    catalog.write_text("C2xC2\n# a comment\n\nQ8\n", encoding="utf-8")
    code, out, _ = run_cli(capsys, "fw", "survey", "--catalog", str(catalog))
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("group,order,subgroup,sub_order,gcd")
    assert "C2xC2,4,order=2:0,2,false,true,true,false,false,false,false,false," in lines
    assert "Q8,8,order=2:0,2,true,true,true,true,true,true,true,true," in lines


def test_outputs_are_byte_identical(capsys):
    _, first, _ = run_cli(capsys, "marks", "S4")
    _, second, _ = run_cli(capsys, "marks", "S4")
    assert first == second
    _, s1, _ = run_cli(capsys, "fw", "survey", "--catalog", "/dev/null")
    _, s2, _ = run_cli(capsys, "fw", "survey", "--catalog", "/dev/null")
    assert s1 == s2


def test_out_flag_writes_file(capsys, tmp_path):
    target = tmp_path / "out.json"
    code, out, _ = run_cli(capsys, "group", "C6", "--out", str(target))
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text(encoding="utf-8"))["order"] == 6


def test_element_from_file(capsys, tmp_path):
    path = tmp_path / "elem.json"
    path.write_text('[["4:0", "2/1"]]', encoding="utf-8")
    code, out, _ = run_cli(capsys, "fw", "apply", "C12", str(path))
    assert code == 0
    assert json.loads(out)["element"] == [["4:0", "2/1"]]


def test_exit_code_parse_errors(capsys):
    assert run_cli(capsys, "group", "Zork")[0] == 1
    assert run_cli(capsys, "group", "C0")[0] == 1
    assert run_cli(capsys, "op", "res", "S3", "nonsense", "[]")[0] == 1
    assert run_cli(capsys, "fw", "apply", "S3", "[broken json")[0] == 1
    assert run_cli(capsys, "fw", "apply", "S3", "/no/such/file.json")[0] == 1


def test_exit_code_usage_errors(capsys):
    assert run_cli(capsys, "lattice")[0] == 1
    assert run_cli(capsys, "marks", "S3", "--format", "bogus")[0] == 1
    assert run_cli(capsys, "group", "S3", "--format", "csv")[0] == 1


def test_exit_code_preconditions(capsys):
    assert run_cli(capsys, "group", "C600")[0] == 2
    assert run_cli(capsys, "op", "def", "S4", "order=2:0", "[]")[0] == 2
    assert run_cli(capsys, "mconst", "S3", "order=6:0", "order=2:0")[0] == 2
    assert run_cli(capsys, "lattice", "S3", "--cap", "4")[0] == 2
    assert run_cli(capsys, "op", "res", "S3", "order=4:0", "[]")[0] == 2


def test_help_exits_zero(capsys):
    assert run_cli(capsys, "--help")[0] == 0
    assert run_cli(capsys, "fw", "--help")[0] == 0


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "fwburnside.cli", "group", "C4"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["order"] == 4
