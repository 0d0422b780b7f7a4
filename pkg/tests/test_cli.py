import json
import subprocess
import sys

import pytest

from linktau.cli import main
from linktau.lmap import kirk_example, kirk_text, serialize


@pytest.fixture
def kirk_file(tmp_path):
    p = tmp_path / "kirk.lmap"
    p.write_text(kirk_text())
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def last(out):
    return out.strip().splitlines()[-1]


def test_sigma(capsys, kirk_file, tmp_path):
    code, out, _ = run(capsys, "sigma", kirk_file)
    assert code == 0 and last(out) == "RESULT: (0, t^2 + -4*t + 3)"
    empty = tmp_path / "e.lmap"
    empty.write_text("linkmap e\n")
    assert last(run(capsys, "sigma", str(empty))[1]) == "RESULT: (0, 0)"
    bad = tmp_path / "bad.lmap"
    bad.write_text("linkmap b\ndp+ a sign=2 n=1\n")
    code, out, err = run(capsys, "sigma", str(bad))
    assert code == 2 and "line 2" in err


def test_tau_family(capsys, kirk_file, tmp_path):
    code, out, _ = run(capsys, "phi-tau", kirk_file)
    assert code == 0 and last(out) == "RESULT: 1 + t"
    assert last(run(capsys, "omega", kirk_file)[1]) == "RESULT: 1"
    code, out, _ = run(capsys, "tau", kirk_file)
    assert code == 0 and out.startswith("I(W1): 1")
    nodisks = tmp_path / "n.lmap"
    nodisks.write_text("linkmap n\n")
    assert last(run(capsys, "tau", str(nodisks))[1]) == "RESULT: 0"
    unframed = tmp_path / "u.lmap"
    unframed.write_text(kirk_text().replace("primary=1 framed=1", "primary=1 framed=0", 1))
    code, out, err = run(capsys, "phi-tau", str(unframed))
    assert code == 2 and "unframed" in err and "W2" in err


def test_check_relations(capsys, kirk_file):
    code, out, _ = run(capsys, "check-relations", "--kmax", "0")
    assert code == 0 and last(out) == "RESULT: PASS 3"
    code, out, _ = run(capsys, "check-relations", kirk_file, "--kmax", "50")
    assert code == 0
    assert int(last(out).split()[-1]) >= 3 * 101**2
    code, out, err = run(capsys, "check-relations", "--kmax", "1", "--r4", "1:0")
    assert code == 1
    assert "nonzero image: R4 k=0 w2=0 g=1 witness=s^0 value=1 Phi=1" in out


def test_wall(capsys, kirk_file, tmp_path):
    code, out, _ = run(capsys, "wall", kirk_file)
    assert code == 0 and last(out) == "RESULT: [0, 0, 0, 0, 0]"
    assert "A5: disc = 2*t + 2" in out and out.count("disc = t + 1") == 4
    empty = tmp_path / "e.lmap"
    empty.write_text("linkmap e\n")
    assert last(run(capsys, "wall", str(empty))[1]) == "RESULT: []"


@pytest.mark.parametrize("n", [0, 3, 5])
def test_pi2(capsys, tmp_path, n):
    p = tmp_path / "h.lmap"
    p.write_text(f"linkmap h\nhandles {n}\n")
    code, out, _ = run(capsys, "pi2", str(p))
    assert code == 0 and last(out) == f"RESULT: {n}"


def test_pi2_needs_handles(capsys, tmp_path):
    p = tmp_path / "h.lmap"
    p.write_text("linkmap h\n")
    assert run(capsys, "pi2", str(p))[0] == 2


def test_equal(capsys, kirk_file):
    code, out, _ = run(capsys, "equal", "s^3*t^3", "s^3")
    assert code == 0 and "1 R1 k=3" in out and last(out) == "RESULT: EQUAL"
    code, out, _ = run(capsys, "equal", "1 + t", "--file", kirk_file, "--window", "10")
    assert "DISTINCT via=Phi lhs=1 + t rhs=0" in out
    code, _, err = run(capsys, "equal", "s^9", "--window", "2")
    assert code == 2 and "window" in err
    assert run(capsys, "equal", "s^^2")[0] == 2


def test_json_format(capsys, kirk_file):
    code, out, _ = run(capsys, "sigma", kirk_file, "--format", "json")
    data = json.loads(out)
    assert data == {"sigma_plus": "0", "sigma_minus": "t^2 + -4*t + 3", "result": "(0, t^2 + -4*t + 3)", "ok": True}


def test_fmt_is_canonical(capsys, kirk_file):
    code, out, _ = run(capsys, "fmt", kirk_file)
    assert code == 0 and out == kirk_text()


def test_verify_paper_pristine(capsys):
    code, out, _ = run(capsys, "verify-paper")
    assert code == 0
    assert out.count("[PASS]") == 9 and last(out) == "RESULT: PASS"


def test_verify_paper_json(capsys):
    code, out, _ = run(capsys, "verify-paper", "--format", "json", "--kmax", "50")
    data = json.loads(out)
    assert code == 0 and data["result"] == "PASS"
    assert all(data[f"check_{i}"]["pass"] for i in range(1, 10))


def _without_w1(text):
    lines = text.splitlines(keepends=True)
    start = lines.index("disk W1 pair=w1 primary=0 framed=1\n")
    return "".join(lines[:start] + lines[start + 3:])


def test_verify_paper_detects_deleted_disk(capsys, tmp_path):
    p = tmp_path / "broken.lmap"
    p.write_text(_without_w1(kirk_text()))
    code, out, _ = run(capsys, "verify-paper", "--data", str(p))
    assert code == 1
    line = next(ln for ln in out.splitlines() if " 2. " in ln)
    assert line.startswith("[FAIL]") and "Phi(tau) = t" in line


def test_verify_paper_detects_flipped_sigma(capsys, tmp_path):
    text = kirk_text()
    for i in range(1, 5):
        text = text.replace(f"dp- q{i} sign=-1", f"dp- q{i} sign=+1")
    text = text.replace("dp- q5 sign=+1 n=2", "dp- q5 sign=-1 n=2")
    p = tmp_path / "flipped.lmap"
    p.write_text(text)
    code, out, _ = run(capsys, "verify-paper", "--data", str(p))
    assert code == 1
    assert next(ln for ln in out.splitlines() if " 1. " in ln).startswith("[FAIL]")
    assert "-t^2 + 4*t + -3" in out


def test_usage_error_exit_code():
    proc = subprocess.run([sys.executable, "-m", "linktau.cli", "nosuchcommand"], capture_output=True)
    assert proc.returncode == 2
