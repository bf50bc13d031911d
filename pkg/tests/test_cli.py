import json
import subprocess
import sys
from pathlib import Path

import pytest

from valchain import jsonio
from valchain.chains import validate_okutsu
from valchain.cli import main
from valchain.fixtures import get_fixture

ROOT = Path(__file__).resolve().parent.parent
FIX = ROOT / "fixtures"
GOLDEN = Path(__file__).resolve().parent / "golden"
CASES = json.loads((GOLDEN / "cases.json").read_text())


def run(argv, cwd=ROOT):
    proc = subprocess.run([sys.executable, "-m", "valchain.cli", *argv], cwd=cwd,
                          capture_output=True, env={"PATH": "", "PYTHONHASHSEED": "0"})
    return proc.returncode, proc.stdout, proc.stderr.decode()


@pytest.mark.parametrize("case", CASES, ids=[c["name"] for c in CASES])
def test_golden(case):
    code, out, _ = run(case["argv"], ROOT / case["cwd"])
    assert code == case["exit"]
    assert out == (GOLDEN / case["output"]).read_bytes()


def test_determinism():
    a = run(["demo", "B"])
    b = run(["demo", "B"])
    assert a == b


def cli(argv, capsys, cwd, monkeypatch):
    monkeypatch.chdir(cwd)
    code = main(argv)
    cap = capsys.readouterr()
    return code, cap.out, cap.err


@pytest.mark.parametrize("argv,expected", [
    (["expand", "--poly", "X^4+4", "--Q", "X^2+2", "--p", "2"], "f_0 = 8\nf_1 = -4\nf_2 = 1\n"),
    (["epsilon", "--valuation", "fixtureA.w1.json", "--poly", "X^2+2"], "3/4\n"),
    (["mutual", "--F", "X^2-2", "--G", "X", "--p", "2"], "{1/2, 1/2}\n"),
    (["mutual", "--F", "X^2-2", "--G", "X^2-6", "--p", "2"], "{1, 1, 1, 1}\n"),
    (["optimal-value", "--theta", "X^4-4X^2-4", "--delta", "1", "--poly", "X^2-2", "--p", "2"], "3/4\n"),
    (["optimal-value", "--theta", "X^2-2", "--delta", "1", "--poly", "X^2+2", "--p", "2", "--wbar"], "2\n"),
    (["truncate", "--valuation", "fixtureA.w1.json", "--Q", "X", "--poly", "X^2+2"], "1\n"),
    (["augment", "--valuation", "fixtureA.w1.json", "--phi", "X^4+4", "--gamma", "4"],
     "[v; X, 1/2; X^2+2, 3/2; X^4+4, 4]\n"),
    (["eval", "--valuation", "fixtureB.w2.json", "--poly", "X^4-4X^2-4", "--json"], '{\n  "value": "4"\n}\n'),
])
def test_commands(argv, expected, capsys, monkeypatch):
    code, out, _ = cli(argv, capsys, FIX, monkeypatch)
    assert (code, out) == (0, expected)


def test_exit_codes(capsys, monkeypatch):
    code, out, err = cli(["validate", "--chain", "fixtureB.sdc.json", "--candidates",
                          "fixtureB-repaired.candidates.json"], capsys, FIX, monkeypatch)
    assert code == 1 and "[FAIL]" in out and "witness X^2+2X+2" in out
    code, _, err = cli(["eval", "--valuation", "missing.json", "--poly", "X"], capsys, FIX, monkeypatch)
    assert code == 2 and "missing.json" in err
    code, _, err = cli(["eval", "--valuation", "fixtureA.w1.json", "--poly", "X", "--p", "3"],
                       capsys, FIX, monkeypatch)
    assert code == 2 and "differs" in err
    code, _, err = cli(["demo", "Z"], capsys, FIX, monkeypatch)
    assert code == 2 and "unknown fixture" in err
    code, _, err = cli(["augment", "--valuation", "fixtureA.w1.json", "--phi", "X^2+2", "--gamma", "1"],
                       capsys, FIX, monkeypatch)
    assert code == 2
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2


def test_schema_error_reports_path(tmp_path, capsys, monkeypatch):
    doc = json.loads((FIX / "fixtureB.sdc.json").read_text())
    doc["gaps"] = ["1/2", "1"]
    p = tmp_path / "broken.json"
    p.write_text(json.dumps(doc))
    code, _, err = cli(["validate", "--chain", str(p)], capsys, tmp_path, monkeypatch)
    assert code == 2 and "broken.json" in err and "$.gaps" in err


@pytest.mark.parametrize("src,to", [
    ("fixtureB.sdc.json", "okutsu"), ("fixtureB.sdc.json", "complete-set"),
    ("fixtureA.maclane.json", "complete-set"), ("fam-as.mlv.json", "complete-set"),
])
def test_emitted_chains_reparse_and_revalidate(src, to, tmp_path, capsys, monkeypatch):
    code, out, _ = cli(["convert", "--from", src, "--to", to, "--json"], capsys, FIX, monkeypatch)
    assert code == 0
    p = tmp_path / "out.json"
    p.write_text(out)
    x = jsonio.chain_from(json.loads(out))
    assert jsonio.dumps(jsonio.chain_to(x)) == out
    code, out2, _ = cli(["validate", "--chain", str(p), "--candidates",
                         str(FIX / "fixtureB.candidates.json")], capsys, tmp_path, monkeypatch)
    assert code == 0


def test_convert_back_from_okutsu(tmp_path, capsys, monkeypatch):
    _, out, _ = cli(["convert", "--from", "fixtureB.sdc.json", "--to", "okutsu", "--json"],
                    capsys, FIX, monkeypatch)
    p = tmp_path / "frame.json"
    p.write_text(out)
    code, out2, _ = cli(["convert", "--from", str(p), "--to", "sdc", "--json"], capsys, tmp_path, monkeypatch)
    assert code == 0 and json.loads(out2) == json.loads((FIX / "fixtureB.sdc.json").read_text())
    frame = jsonio.chain_from(json.loads(out))
    assert validate_okutsu(frame, None, get_fixture("B").candidates).ok


def test_fixture_files_match_bundled_objects():
    sys.path.insert(0, str(ROOT / "scripts"))
    import export_fixtures
    for name, doc in export_fixtures.documents():
        assert json.loads((FIX / name).read_text()) == doc, name
