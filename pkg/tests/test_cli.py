import io
import json
import subprocess
import sys

import pytest

from conftest import GOLDEN
from noethera.cli import main


def cli(*argv, stdin=None, monkeypatch=None):
    out = io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv), out=out)
    return code, out.getvalue()


def cli_proc(*argv, stdin=None):
    return subprocess.run([sys.executable, "-m", "noethera", *argv], input=stdin,
                          capture_output=True, text=True, timeout=60)


def test_ord_commands():
    assert cli("ord", "eval", "4 + w", "w^1*1") == (0, "w + 4\nw\n")
    assert cli("ord", "natsum", "w+1", "w") == (0, "w*2 + 1\n")
    assert cli("ord", "natprod", "w+1", "w+1") == (0, "w^2 + w*2 + 1\n")
    assert cli("ord", "cmp", "w", "5") == (0, ">\n")
    assert cli("ord", "cmp", "-1", "0") == (0, "<\n")
    assert cli("ord", "cmp", "w")[0] == 2


def test_ord_parse_error_names_position(capsys):
    assert cli("ord", "eval", "w^")[0] == 2
    assert "position 2" in capsys.readouterr().err


def test_chomp_commands(capsys):
    assert cli("chomp", "size", "--alpha", "w", "--cuts", "2:1,0:3") == (0, "w + 4\n")
    assert cli("chomp", "size", "--alpha", "w") == (0, "w^2\n")
    code, out = cli("chomp", "play", "--alpha", "w", "--moves", "3:2,0:1")
    assert code == 0 and out == "start\tw^2\n3:2\tw*5\n0:1,3:2\tw\n"
    assert cli("chomp", "play", "--alpha", "w", "--moves", "0:1,0:1")[0] == 1
    assert "illegal move" in capsys.readouterr().err
    assert cli("chomp", "size", "--alpha", "w", "--cuts", "0-1")[0] == 2


def test_noether_run(tmp_path, monkeypatch):
    out_path = tmp_path / "run.json"
    code, out = cli("noether", "run", "--ring", "Q[x]", "--input", "-", "--out", str(out_path),
                    stdin="x^2+1\nx\n# comment\n\n5\nx^3\n7\n", monkeypatch=monkeypatch)
    assert code == 0
    rows = [line.split("\t") for line in out.splitlines()]
    assert rows[:6] == [["step", "element", "bound"], ["0", "-", "w"], ["1", "x^2 + 1", "2"],
                        ["2", "x", "1"], ["3", "5", "0"], ["4", "x^3", "good"]]
    assert rows[6] == ["# s4 = (x)*s1 + (-1)*s2"]
    assert out_path.read_bytes() == (GOLDEN / "run_qx.noethera.json").read_bytes()


def test_noether_run_input_errors(tmp_path, capsys):
    f = tmp_path / "in.txt"
    f.write_text("4\n2 +\n")
    assert cli("noether", "run", "--ring", "Z", "--input", str(f))[0] == 2
    assert f"{f}:2:" in capsys.readouterr().err
    assert cli("noether", "run", "--ring", "Z", "--input", str(tmp_path / "missing"))[0] == 2
    assert cli("noether", "run", "--ring", "GF(6)", "--input", str(f))[0] == 2


def test_noether_run_step_limit(tmp_path, capsys):
    f = tmp_path / "in.txt"
    f.write_text("12\n8\n4\n")
    out_path = tmp_path / "pending.json"
    code, out = cli("noether", "run", "--ring", "Z", "--input", str(f), "--max-steps", "2", "--out", str(out_path))
    assert code == 1 and "max-steps" in capsys.readouterr().err
    doc = json.loads(out_path.read_text())
    assert doc["result"] == {"status": "pending"} and doc["stream"] == ["12", "8"]
    assert cli("verify", str(out_path))[0] == 0


def test_krull_collapse(tmp_path, capsys):
    assert cli("krull", "collapse", "--ring", "Q[x,y]", "--elements", "x,y")[0] == 1
    assert "insufficient ordinal headroom" in capsys.readouterr().err
    p = tmp_path / "c.json"
    code, out = cli("krull", "collapse", "--ring", "Q[x,y]", "--elements", "x,y,x+y", "--out", str(p))
    assert code == 0 and p.exists() and out.startswith("index\texponents\tmonomial\n")
    code, out = cli("krull", "collapse", "--ring", "Z", "--elements", "2,3", "--probe", "bound")
    assert out == "index\texponents\tmonomial\nw\t0,1\t3\n2\t2,0\t4\n0\t0,0\t1\n"
    assert cli("krull", "collapse", "--ring", "Z", "--elements", "2,,3")[0] == 2
    assert cli("krull", "collapse", "--ring", "Z", "--elements", "7,1000", "--probe", "bound",
               "--max-exponent", "10")[0] == 1


def test_krull_check(tmp_path):
    golden = str(GOLDEN / "collapse_z.noethera.json")
    assert cli("krull", "check", golden, "--lombardi") == (0, f"{golden}: ok\nlombardi: full\n")
    assert cli("krull", "check", str(GOLDEN / "run_qx.noethera.json"), "--lombardi")[0] == 2


def test_verify_exit_codes(tmp_path):
    good = str(GOLDEN / "run_qx.noethera.json")
    assert cli("verify", good) == (0, f"{good}: ok\n")
    obj = json.loads((GOLDEN / "run_qx.noethera.json").read_text())
    obj["result"]["comb"][1] = "-2"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(obj))
    code, out = cli("verify", good, str(bad))
    assert code == 1 and "FAIL combination identity" in out and "FAIL digest" in out
    broken = tmp_path / "broken.json"
    broken.write_text("{")
    assert cli("verify", good, str(bad), str(broken))[0] == 2


def test_usage_errors():
    with pytest.raises(SystemExit) as e:
        main(["chomp"])
    assert e.value.code == 2


def test_subprocess_round_trip(tmp_path):
    """Certificates written by one process verify in a fresh one, byte-identically each run."""
    outs = []
    for k in range(2):
        p = tmp_path / f"run{k}.json"
        r = cli_proc("noether", "run", "--ring", "Q[x]", "--input", "-", "--out", str(p),
                     stdin="x^2+1\nx\n5\nx^3\n")
        assert r.returncode == 0, r.stderr
        outs.append((r.stdout, p.read_bytes()))
    assert outs[0] == outs[1]
    r = cli_proc("verify", str(tmp_path / "run0.json"))
    assert r.returncode == 0 and r.stdout.endswith(": ok\n")
    r = cli_proc("krull", "collapse", "--ring", "Q[x,y]", "--elements", "x,y")
    assert r.returncode == 1 and "insufficient ordinal headroom" in r.stderr
