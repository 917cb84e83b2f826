import json

import pytest

from rieszlab import cli
from rieszlab.approx import uniform_grid
from rieszlab.core import Counterexample, LawReport
from rieszlab.serialization import decode_expr


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def t2_file(tmp_path):
    path = tmp_path / "t2.json"
    path.write_text(json.dumps({"values": [f"{p.numerator ** 2}/{p.denominator ** 2}" for p in uniform_grid(11)]}))
    return path


def test_verify_fin(capsys):
    code, out, _ = run(capsys, "verify", "--space", "fin:3", "--cases", "100", "--seed", "7")
    assert code == 0
    assert "FAIL" not in out and out.rstrip().endswith("result: ok")


def test_verify_lex_notes_witness(capsys):
    code, out, _ = run(capsys, "verify", "--space", "lex", "--cases", "100", "--seed", "7")
    assert code == 0
    assert "non-Archimedean: witness (0,1)" in out
    assert "SKIP norm-definite" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--space", "pl", "--cases", "30", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["passed"] and len(data["reports"]) == 22


def test_verify_fin0_is_usage_error(capsys):
    code, _, err = run(capsys, "verify", "--space", "fin:0")
    assert code == 2 and "positive" in err


def test_verify_reports_failure(capsys, monkeypatch):
    bad = LawReport("join-plus-meet", "x ∨ y + x ∧ y = x + y", 5,
                    Counterexample(((1, 2), (3, 4)), (1, 1), (2, 2)))
    monkeypatch.setattr(cli, "check_laws", lambda *a, **k: [bad])
    code, out, _ = run(capsys, "verify", "--space", "lex")
    assert code == 3 and "FAIL join-plus-meet" in out


def test_spectrum(capsys):
    code, out, _ = run(capsys, "spectrum", "--space", "fin:3", "--unit", '["1","2","4"]', "--format", "json")
    assert code == 0 and json.loads(out)["coefficients"] == ["1", "1/2", "1/4"]


def test_spectrum_needs_fin(capsys):
    code, _, err = run(capsys, "spectrum", "--space", "lex")
    assert code == 4 and "fin:n" in err


def test_roundtrip(capsys):
    code, out, _ = run(capsys, "roundtrip", "--space", "fin:4", "--unit", "ones")
    assert code == 0 and out.splitlines()[0] == "CΦ≅id: ok, ΦC≅id: ok"


def test_decompose_and_norm(capsys):
    code, out, _ = run(capsys, "decompose", "--space", "fin:2", "--x", '["1","2"]', "--a", '["2","0"]',
                       "--b", '["0","3"]', "--format", "json")
    assert code == 0 and json.loads(out) == {"a_prime": ["1", "0"], "b_prime": ["0", "2"]}
    code, out, _ = run(capsys, "norm", "--space", "fin:3", "--x", '["1","-2","1/2"]', "--format", "json")
    assert json.loads(out)["norm"] == "2"
    code, out, _ = run(capsys, "norm", "--space", "pl", "--x", '{"t":["0","1"],"v":["0","1"]}',
                       "--unit", '{"t":["0","1"],"v":["1","2"]}', "--format", "json")
    assert json.loads(out)["norm"] == "1/2"


def test_decompose_precondition(capsys):
    code, _, err = run(capsys, "decompose", "--space", "fin:1", "--x", '["5"]', "--a", '["1"]', "--b", '["1"]')
    assert code == 4 and "x <= a + b" in err


def test_malformed_json(capsys):
    code, _, err = run(capsys, "norm", "--space", "fin:2", "--x", '["1"')
    assert code == 2 and "malformed JSON" in err


def test_float_literal_rejected(capsys):
    code, _, _ = run(capsys, "norm", "--space", "fin:1", "--x", "[0.5]")
    assert code == 4


def test_bad_unit(capsys):
    code, _, err = run(capsys, "norm", "--space", "fin:2", "--x", '["1","1"]', "--unit", '["1","0"]')
    assert code == 4 and "not a unit" in err


def test_approx_writes_expression(capsys, tmp_path, t2_file):
    out_file = tmp_path / "expr.json"
    code, out, _ = run(capsys, "approx", "--grid", "11", "--target", str(t2_file), "--gens", "unital-affine",
                       "--eps", "1/10", "--out", str(out_file), "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["grid_error"] == "0" and "expr" not in data
    decode_expr(json.loads(out_file.read_text()))


def test_approx_reports_continuum_error_for_pl_target(capsys, tmp_path):
    target = tmp_path / "hat.json"
    target.write_text(json.dumps({"t": ["0", "2/5", "1/2", "3/5", "1"], "v": ["0", "0", "1", "0", "0"]}))
    code, out, _ = run(capsys, "approx", "--target", str(target), "--format", "json")
    assert code == 0 and json.loads(out)["continuum_error"] == "0"


def test_approx_missing_file(capsys, tmp_path):
    code, _, _ = run(capsys, "approx", "--target", str(tmp_path / "nope.json"))
    assert code == 2


def test_laws_list(capsys):
    code, out, _ = run(capsys, "laws-list", "--format", "json")
    assert code == 0 and len(json.loads(out)["laws"]) == 22


def test_env_seed_overrides_flag(capsys, monkeypatch):
    monkeypatch.setenv("RIESZ_SEED", "5")
    _, a, _ = run(capsys, "verify", "--space", "lex", "--cases", "20", "--seed", "1", "--format", "json")
    monkeypatch.delenv("RIESZ_SEED")
    _, b, _ = run(capsys, "verify", "--space", "lex", "--cases", "20", "--seed", "5", "--format", "json")
    assert json.loads(a)["seed"] == 5 and a == b


def test_no_command_is_usage_error(capsys):
    assert run(capsys)[0] == 2
