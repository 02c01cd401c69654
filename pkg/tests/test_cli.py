import json
import shutil
import subprocess

import pytest

from lieboson.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_build_u2_text(capsys):
    code, out, _ = run(capsys, "build", "u2")
    assert code == 0
    assert out.splitlines()[0] == "lieboson build u2"
    assert "radical: <g1 + g4>" in out


def test_build_u4_json(capsys):
    code, doc = run_json(capsys, "build", "u4")
    assert code == 0
    r = doc["results"]
    assert len(r["generators"]) == 16
    assert r["levi_dimension"] == 15
    assert r["jacobi_residuals"] == 0
    assert doc["command"] == "build" and doc["model"] == "u4" and doc["format"] == "json"


def test_unknown_model_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["build", "u9"])
    assert info.value.code == 2


def test_unknown_jset_exit_2(capsys):
    code, out, err = run(capsys, "tensor", "u3", "--jset", "Q")
    assert code == 2 and not out and "J-sets" in err


def test_negative_n_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["spectrum", "--N", "-1"])
    assert info.value.code == 2


@pytest.mark.parametrize("model,count", [("u4", 4), ("u3", 2), ("u2", 1)])
def test_classify_counts(capsys, model, count):
    code, doc = run_json(capsys, "classify", model)
    assert code == 0 and len(doc["results"]["classes"]) == count


def test_classify_u3_diagrams(capsys):
    _, doc = run_json(capsys, "classify", "u3")
    assert sorted(c["wdd"] for c in doc["results"]["classes"]) == [[1, 1], [2, 2]]


def test_tensor_u3_w(capsys):
    code, doc = run_json(capsys, "tensor", "u3", "--jset", "W")
    ms = doc["results"]["multiplets"]
    assert code == 0
    assert sorted(m["rank"] for m in ms) == ["0", "0", "1", "1/2", "1/2"]
    assert sum(m["spinor"] for m in ms) == 2


@pytest.mark.parametrize("jset,ranks", [("L", ["0", "1", "1", "1", "2"]), ("W", ["0"] * 4 + ["1"] + ["1/2"] * 4)])
def test_tensor_u4(capsys, jset, ranks):
    _, doc = run_json(capsys, "tensor", "u4", "--jset", jset)
    assert sorted(m["rank"] for m in doc["results"]["multiplets"]) == sorted(ranks)


def test_tables_exit_codes(capsys):
    assert run(capsys, "tables", "202")[0] == 0
    code, out, err = run(capsys, "tables", "101")
    assert code == 3 and "FAIL" in out and "verified: (-g5, -g3, g9)" in out
    assert run(capsys, "tables")[0] == 3


def test_chains_u3(capsys):
    code, doc = run_json(capsys, "chains", "u3")
    assert code == 0 and doc["results"]["count"] == 6


def test_chains_u4_semisimple_sheet(capsys):
    _, doc = run_json(capsys, "chains", "u4")
    assert doc["results"]["count"] == 7


def test_spectrum_delta(capsys):
    code, doc = run_json(capsys, "spectrum", "--delta", "1", "--N", "1")
    assert code == 0
    assert sorted(lv["E"] for lv in doc["results"]["levels"]) == ["0", "0", "0", "2"]


def test_spectrum_fraction_coefficients(capsys):
    _, doc = run_json(capsys, "spectrum", "--alpha", "1/3", "--N", "2")
    assert {lv["E"] for lv in doc["results"]["levels"]} == {"4"}


def test_fock_w2(capsys):
    code, doc = run_json(capsys, "fock", "u4", "--op", "W2", "--N", "1")
    assert code == 0
    assert doc["results"]["eigenvalues"] == pytest.approx([0, 0, 0.75, 0.75], abs=1e-8)
    assert [lv["j"] for lv in doc["results"]["levels"]] == ["0", "1/2"]


def test_fock_unknown_operator_exit_2(capsys):
    code, _, err = run(capsys, "fock", "u3", "--op", "J2", "--N", "1")
    assert code == 2 and "J2" in err


@pytest.mark.parametrize("argv", [
    ["build", "u3"], ["classify", "u4"], ["tensor", "u4", "--jset", "222"], ["tables", "020"],
    ["chains", "u2u2"], ["spectrum", "--beta", "1", "--N", "2"], ["fock", "u3", "--op", "L2", "--N", "2"],
])
def test_json_roundtrip_and_determinism(capsys, argv):
    code1, out1, _ = run(capsys, *argv, "--format", "json")
    code2, out2, _ = run(capsys, *argv, "--format", "json")
    assert code1 == code2 and out1 == out2
    doc = json.loads(out1)
    assert json.loads(json.dumps(doc)) == doc
    assert doc["echo"] == " ".join(argv)


def test_env_default_format(capsys, monkeypatch):
    monkeypatch.setenv("LIEBOSON_FORMAT", "json")
    code, out, _ = run(capsys, "chains", "u2")
    assert json.loads(out)["results"]["count"] == 2
    code, out, _ = run(capsys, "chains", "u2", "--format", "text")
    assert out.startswith("lieboson chains u2")


def test_text_and_json_agree(capsys):
    _, doc = run_json(capsys, "chains", "u2u2")
    _, text, _ = run(capsys, "chains", "u2u2")
    for c in doc["results"]["chains"]:
        assert " > ".join(c["nodes"]) in text


@pytest.mark.skipif(shutil.which("lieboson") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["lieboson", "classify", "u2"], capture_output=True, text=True)
    assert proc.returncode == 0 and "[2]" in proc.stdout
    proc = subprocess.run(["lieboson", "build", "u9"], capture_output=True, text=True)
    assert proc.returncode == 2 and proc.stderr
