import json
import subprocess
import sys

import pytest

from jpgeom import catalog
from jpgeom.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_catalog_list_and_show(capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0 and out.split() == catalog.names()
    code, out, _ = run(capsys, "catalog", "show", "sl2", "--field", "q")
    assert code == 0 and json.loads(out)["name"] == "sl2"
    assert run(capsys, "catalog", "show", "nope")[0] == 2


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "thm1.6", "--entry", "sl2", "--json")
    data = json.loads(out)
    assert code == 0 and data["failed"] == 0 and data["suite"] == "thm1.6"
    assert run(capsys, "verify", "--suite", "thm0.0")[0] == 2
    assert run(capsys, "verify", "--suite", "thm1.6", "--field", "fp:4")[0] == 2
    assert run(capsys, "verify")[0] == 2


def test_corrupted_entry_fails(capsys, tmp_path):
    data = catalog.save(catalog.get("scalar"))
    data["pair"]["tplus"] = [[[["3"]]]]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    code, out, _ = run(capsys, "verify", "--suite", "jordan-identities", "--entry", str(path), "--json")
    assert code == 1
    assert json.loads(out)["cases"][0]["name"] == "validate-entry"
    path.write_text("{")
    assert run(capsys, "verify", "--suite", "jordan-identities", "--entry", str(path))[0] == 2


def test_orbit(capsys):
    code, out, _ = run(capsys, "orbit", "--entry", "sl2", "--side", "plus")
    assert code == 0 and json.loads(out)["size"] == 6
    code, out, _ = run(capsys, "orbit", "--entry", "sl2", "--side", "gradings")
    assert json.loads(out)["size"] == 30
    code, _, err = run(capsys, "orbit", "--entry", "sl2", "--cap", "3")
    assert code == 1 and "error" in err


def test_act(capsys):
    assert run(capsys, "act", "--entry", "sl2", "--word", "x+:2", "--point", "1") == (0, "3\n", "")
    # exp(ad y) at x = 1, y = 1 sends x to its quasi-inverse 1/2
    assert run(capsys, "act", "--entry", "sl2", "--field", "q", "--word", "x-:1", "--point", "1")[1] == "1/2\n"
    assert run(capsys, "act", "--entry", "scalar", "--word", "x-:1", "--point", "1")[:2] == (0, "not-in-chart\n")
    assert run(capsys, "act", "--entry", "sl2", "--word", "x+:1", "--point", "1,2")[0] == 2
    assert run(capsys, "act", "--entry", "sl2", "--word", "z:1", "--point", "1")[0] == 2


def test_tkk(capsys, tmp_path):
    pair = json.dumps(catalog.get("scalar").pair.to_json())
    code, out, _ = run(capsys, "tkk", "--pair", pair)
    assert code == 0 and json.loads(out)["dims"] == {"total": 3, "grading": [1, 1, 1]}
    path = tmp_path / "pair.json"
    path.write_text(pair)
    assert run(capsys, "tkk", "--pair", str(path))[1] == out
    assert run(capsys, "tkk", "--pair", "{}")[0] == 2
    assert run(capsys, "tkk", "--pair", "not json")[0] == 2


def test_extend(capsys):
    code, out, _ = run(capsys, "extend", "--entry", "trivial")
    dims = json.loads(out)["dims"]
    assert code == 0 and (dims["total"], dims["kernel"]) == (4, 1)
    assert run(capsys, "extend", "--entry", "sl2z")[0] == 2


def test_reports_are_byte_identical():
    cmd = [sys.executable, "-m", "jpgeom", "verify", "--suite", "prop2.6", "--samples", "20", "--seed", "3", "--json"]
    a = subprocess.run(cmd, capture_output=True, check=True)
    b = subprocess.run(cmd, capture_output=True, check=True)
    assert a.stdout == b.stdout and a.stdout


@pytest.mark.parametrize("argv", [[], ["--help"]])
def test_parser_exits(capsys, argv):
    assert main(argv) == (0 if argv else 2)
