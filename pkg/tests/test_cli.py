import hashlib
import json

import pytest

from ltfourier import cli
from ltfourier.report import Case, dumps, emit_report, jsonable
from ltfourier.suites import SUITES


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_empty_report():
    assert emit_report([], "json") == '{"cases":[]}'


def test_single_pass_case_has_holds_true():
    out = emit_report([Case("s", {"m": 1}, 1, 1, True)], "json")
    assert '"holds":true' in out


def test_no_floats_anywhere():
    with pytest.raises(TypeError):
        jsonable(0.5)
    assert dumps({"b": 1, "a": [2]}) == '{"a":[2],"b":1}'


def test_constants_example(capsys):
    code, out, _ = run(capsys, "constants", "--p", "3", "--f", "2", "--e", "1")
    assert code == 0
    assert "s = 3/8" in out
    assert "torsion radius exponent = 1/8" in out
    assert "threshold = 9/8" in out


def test_constants_json(capsys):
    code, out, _ = run(capsys, "constants", "--p", "3", "--e", "2", "--json")
    d = json.loads(out)
    assert d["s"] == {"num": 1, "den": 4}
    assert d["r"] == {"num": 3, "den": 4}


def test_verify_round_trip_suite_exit_zero(capsys):
    code, _, _ = run(capsys, "verify", "--suite", "thm47", "--p", "3", "--f", "1", "--e", "1", "--deg", "6")
    assert code == 0


def test_unknown_suite_is_usage_error(capsys):
    code, _, err = run(capsys, "verify", "--suite", "bogus")
    assert code == 2 and "bogus" in err


def test_unknown_flag_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["field", "--nope"])
    assert exc.value.code == 2
    assert "usage" in capsys.readouterr().err


def test_failing_suite_exits_1(capsys, monkeypatch):
    monkeypatch.setitem(SUITES, "always_fails", lambda st: [Case("always_fails", {"m": 3}, 0, 1, False)])
    code, out, _ = run(capsys, "verify", "--suite", "always_fails", "--json")
    assert code == 1
    assert json.loads(out)["cases"][0]["params"] == {"m": 3}


def test_failure_table_names_parameters(capsys, monkeypatch):
    monkeypatch.setitem(SUITES, "always_fails", lambda st: [Case("always_fails", {"m": 3}, 0, 1, False)])
    _, out, _ = run(capsys, "verify", "--suite", "always_fails")
    assert "FAIL" in out and "m=3" in out


def test_manifest_rerun_is_byte_identical(capsys, tmp_path):
    man = tmp_path / "m.json"
    code, first, _ = run(capsys, "verify", "--suite", "lemma44", "--p", "3", "--f", "2", "--mmax", "10",
                         "--json", "--manifest-out", str(man))
    assert code == 0
    code, second, _ = run(capsys, "verify", "--manifest", str(man), "--json")
    assert code == 0
    assert hashlib.sha256(first.encode()).digest() == hashlib.sha256(second.encode()).digest()
    m = json.loads(man.read_text())
    assert m["suite"] == "lemma44" and m["settings"]["mmax"] == 10
    assert json.dumps(m["report"], sort_keys=True, separators=(",", ":")) == first.strip()


def test_config_and_environment_precedence(capsys, tmp_path, monkeypatch):
    cfg = tmp_path / "c.cfg"
    cfg.write_text("# comment\np = 5\nprec = 40\n")
    monkeypatch.setenv("LTFOURIER_PRECISION", "30")
    _, out, _ = run(capsys, "field", "--json")
    assert json.loads(out)["precision"] == 30
    _, out, _ = run(capsys, "field", "--json", "--config", str(cfg))
    d = json.loads(out)
    assert d["precision"] == 40 and d["p"] == 5
    _, out, _ = run(capsys, "field", "--json", "--config", str(cfg), "--prec", "50", "--p", "7")
    d = json.loads(out)
    assert d["precision"] == 50 and d["p"] == 7


def test_bad_config_key(capsys, tmp_path):
    cfg = tmp_path / "c.cfg"
    cfg.write_text("colour = blue\n")
    code, _, err = run(capsys, "field", "--config", str(cfg))
    assert code == 2 and "colour" in err


def test_missing_config_file(capsys, tmp_path):
    code, _, _ = run(capsys, "field", "--config", str(tmp_path / "absent"))
    assert code == 2


def test_invalid_field_is_usage_error(capsys):
    code, _, _ = run(capsys, "field", "--p", "4")
    assert code == 2


@pytest.mark.parametrize("what", ["group_law", "log", "exp", "frobenius", "derivation", "endo:-1"])
def test_ltgroup_emits_json(capsys, what):
    code, out, _ = run(capsys, "ltgroup", "--p", "2", "--trunc", "4", "--emit", what, "--json")
    assert code == 0
    d = json.loads(out)
    assert d["trunc"] == 4 and "." not in out.replace("\"", "")


def test_ltgroup_bad_series(capsys):
    code, _, _ = run(capsys, "ltgroup", "--emit", "endo:x")
    assert code == 2


def test_torsion_json(capsys):
    _, out, _ = run(capsys, "torsion", "--p", "3", "--e", "2", "--n", "2", "--json")
    assert json.loads(out)["valuations"] == [{"multiplicity": 6, "valuation": {"num": 1, "den": 12}}]


def test_mahler_expand_text(capsys):
    code, out, _ = run(capsys, "mahler", "--p", "3", "--frobenius", "multiplicative", "--expand", "x^2")
    assert code == 0
    assert "c_2 = (2 + O(p^80))*Omega^-2" in out


def test_mahler_bad_polynomial(capsys):
    code, _, _ = run(capsys, "mahler", "--expand", "x +")
    assert code == 2


def test_pairing(capsys):
    code, out, _ = run(capsys, "pairing", "--p", "3", "--m", "2", "--n", "2", "--json")
    d = json.loads(out)
    assert code == 0 and d["terms"][0]["grade"] == -2


def test_console_script_entry_point():
    from importlib.metadata import entry_points
    eps = [ep for ep in entry_points(group="console_scripts") if ep.name == "ltfourier"]
    assert eps and eps[0].value == "ltfourier.cli:main"
