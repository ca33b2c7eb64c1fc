import json
import subprocess
import sys
from pathlib import Path

import pytest

from proofkit.calculi.io import load_derivation
from proofkit.cli import main
from proofkit.natded import check_nd, is_normal, load_nd

ROOT = Path(__file__).resolve().parent.parent
GOLDEN = ROOT / "golden"


def run(capsys, *argv):
    status = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return status, out, err


def report(text):
    return dict(line.split(": ", 1) for line in text.splitlines() if ": " in line and not line.startswith("violation"))


def test_check_golden(capsys):
    status, out, _ = run(capsys, "check", "--calculus", "nd", GOLDEN / "imp_dneg.nd")
    assert status == 0
    rep = report(out)
    assert rep["ok"] == "true" and rep["normal"] == "true" and rep["end"] == "p -> ~~p"


def test_check_malformed(capsys):
    status, out, _ = run(capsys, "check", "--calculus", "slt", GOLDEN / "malformed.slt")
    assert status == 1
    assert "ok: false" in out
    assert any(line.startswith("violation: /1/0: ") for line in out.splitlines())


def test_check_excluded_middle_slt(capsys):
    assert run(capsys, "check", "--calculus", "slt", GOLDEN / "excluded_middle.slt")[0] == 0
    # ex-middle is not an LT rule
    assert run(capsys, "check", "--calculus", "lt", GOLDEN / "excluded_middle.slt")[0] == 1


def test_parse_errors_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.slt"
    bad.write_text("(rule init")
    assert run(capsys, "check", "--calculus", "slt", bad)[0] == 2
    assert run(capsys, "check", "--calculus", "lt", GOLDEN / "imp_dneg.nd")[0] == 2
    assert run(capsys, "check", "--calculus", "nd", tmp_path / "missing.nd")[0] == 2
    assert run(capsys, "oracle", "--formula", "p ->")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "check", "--calculus", "xx", bad)[0] == 2


def test_normalize_indirect(capsys, tmp_path):
    out_file = tmp_path / "n.nd"
    status, out, _ = run(capsys, "normalize", "--mode", "indirect", GOLDEN / "detour1.nd", "--out", out_file)
    assert status == 0
    e = load_nd(out_file.read_text())
    assert check_nd(e) and is_normal(e)
    assert run(capsys, "check", "--calculus", "nd", out_file)[0] == 0


def test_stdout_output_is_loadable(capsys):
    status, out, err = run(capsys, "normalize", GOLDEN / "detour1.nd")
    assert status == 0
    assert check_nd(load_nd(out))
    assert "normal: true" in err


@pytest.mark.parametrize("mode", ["direct", "indirect"])
def test_trace_step_count(capsys, tmp_path, mode):
    trace = tmp_path / "t.json"
    status, out, _ = run(capsys, "normalize", "--mode", mode, GOLDEN / "detour1.nd", "--emit-trace", trace, "--out", tmp_path / "o.nd")
    assert status == 0
    assert len(json.loads(trace.read_text())) == int(report(out)["steps"])


def test_translation_chain(capsys, tmp_path):
    a, b, c, d, e = (tmp_path / n for n in ("a.slt", "b.slt", "c.lt", "d.slt", "e.nd"))
    assert run(capsys, "translate", "--from", "nd", "--to", "slt", GOLDEN / "imp_dneg.nd", "--out", a)[0] == 0
    trace = tmp_path / "cut.json"
    status, out, _ = run(capsys, "cutelim", "--calculus", "slt", a, "--out", b, "--emit-trace", trace)
    assert status == 0
    rep = report(out)
    assert rep["cuts"] == "0" and int(rep["input_cuts"]) > 0
    assert len(json.loads(trace.read_text())) == int(rep["steps"])
    assert run(capsys, "translate", "--from", "slt", "--to", "lt", b, "--out", c)[0] == 0
    # ex-middle becomes cuts in LT, so the LT image needs its own cut elimination
    c2 = tmp_path / "c2.lt"
    assert run(capsys, "cutelim", "--calculus", "lt", c, "--out", c2)[0] == 0
    assert run(capsys, "translate", "--from", "lt", "--to", "slt", c2, "--out", d)[0] == 0
    assert run(capsys, "translate", "--from", "slt", "--to", "nd", b, "--out", e)[0] == 0
    for path, calc in [(a, "slt"), (b, "slt"), (c, "lt"), (c2, "lt"), (d, "slt"), (e, "nd")]:
        assert run(capsys, "check", "--calculus", calc, path)[0] == 0, path
    assert str(load_derivation(d.read_text()).conclusion) == "~(p -> ~~p) =>"


def test_cutelim_lt(capsys, tmp_path):
    lt, out_file = tmp_path / "a.lt", tmp_path / "b.lt"
    run(capsys, "translate", "--from", "nd", "--to", "lt", GOLDEN / "dneg_imp_self.nd", "--out", lt)
    status, out, _ = run(capsys, "cutelim", "--calculus", "lt", lt, "--out", out_file)
    assert status == 0 and report(out)["cut_free"] == "true"


def test_cutelim_fuel_exhaustion(capsys, tmp_path):
    a = tmp_path / "a.slt"
    run(capsys, "translate", "--from", "nd", "--to", "slt", GOLDEN / "imp_dneg.nd", "--out", a)
    status, out, _ = run(capsys, "cutelim", "--calculus", "slt", "--fuel", "1", a)
    assert status == 1 and "ok: false" in out


def test_translation_needs_cut_free_input(capsys, tmp_path):
    a = tmp_path / "a.slt"
    run(capsys, "translate", "--from", "nd", "--to", "slt", GOLDEN / "imp_dneg.nd", "--out", a)
    assert run(capsys, "translate", "--from", "slt", "--to", "nd", a)[0] == 1
    assert run(capsys, "translate", "--from", "nd", "--to", "nd", a)[0] == 2


def test_reduce(capsys, tmp_path):
    out_file = tmp_path / "r.nd"
    status, out, _ = run(capsys, "reduce", "--steps", "3", GOLDEN / "detour1.nd", "--out", out_file)
    assert status == 0
    rep = report(out)
    assert rep["steps"] == "1" and rep["cases"] == "1" and rep["remaining"] == "0"


def test_identity(capsys, tmp_path):
    out_file = tmp_path / "i.slt"
    status, out, _ = run(capsys, "identity", "--formula", "G p", "--index", "2", "--context", "r", "--out", out_file)
    assert status == 0
    assert report(out)["end"] == "X X G p, r => X X G p"
    assert run(capsys, "check", "--calculus", "slt", out_file)[0] == 0


def test_oracle(capsys):
    status, out, _ = run(capsys, "oracle", "--formula", "G p -> X X p")
    assert status == 0 and report(out)["valid"] == "true"
    status, out, _ = run(capsys, "oracle", "--formula", "F p -> X p", "--max-lasso", "3")
    assert status == 1 and "countermodel_loop" in out


def test_json_report(capsys):
    status, out, _ = run(capsys, "check", "--calculus", "nd", "--json", GOLDEN / "detour1.nd")
    data = json.loads(out)
    assert status == 0 and data["ok"] is True and data["normal"] is False


def test_console_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "proofkit.cli", "check", "--calculus", "nd", str(GOLDEN / "imp_dneg.nd")],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and "ok: true" in proc.stdout


def test_golden_files_are_current():
    sys.path.insert(0, str(ROOT / "scripts"))
    try:
        from make_golden import golden_files
    finally:
        sys.path.pop(0)
    for name, text in golden_files().items():
        assert (GOLDEN / name).read_text() == text, name
