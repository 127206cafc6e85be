import io
import json
import subprocess
import sys

import pytest

from fieldlab.cli import main
from fieldlab.codes import ChannelReport, Code
from fieldlab.designs import BlockDesign
from fieldlab.fingeo import IncidenceStructure
from fieldlab.gfield import OpTablePair
from fieldlab.serialize import FormatError, parse, serialize
from fieldlab.tablesearch import SearchResult


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("argv,status", [
    (["mod", "op", "--n", "7", "--a", "3", "--b", "5", "--op", "mul"], 0),
    (["mod", "inverse", "--n", "6", "--a", "2"], 1),
    (["mod", "inverse", "--n", "0", "--a", "2"], 1),
    (["mod", "frobnicate"], 2),
    (["poly", "divmod", "--p", "2", "--f", "[1,0,1]", "--g", "[0]"], 1),
    (["poly", "roots", "--p", "2", "--f", "1+q+z^2"], 2),
    (["field", "--p", "2", "--f", "[1,0,1]", "info"], 1),
    (["field", "--p", "4", "info"], 1),
    (["field", "info"], 2),
    (["field", "--p", "2", "--f", "[1,1,1]", "inverse", "--a", "0"], 1),
    (["search", "--order", "8"], 1),
    (["search", "--order", "six"], 2),
    (["plane", "--q", "6"], 1),
    (["plane"], 2),
    (["design", "verify", "--fixture", "nine-point-design"], 0),
    (["design", "verify", "--fixture", "fano"], 2),
    (["design", "verify", "--file", "/nonexistent.json"], 2),
    (["code", "decode", "--code", "rep2", "--word", "01"], 1),
    (["code", "decode", "--code", "hamming"], 2),
    (["code", "simulate", "--p", "0.01", "--trials", "100"], 2),
    ([], 2),
])
def test_exit_status_matrix(argv, status):
    assert run(*argv)[0] == status


def test_outputs():
    assert run("mod", "op", "--n", "7", "--a", "3", "--b", "5", "--op", "mul")[1] == "[1]_7\n"
    assert run("mod", "units", "--n", "8")[1] == "{1, 3, 5, 7}\n"
    assert run("poly", "divmod", "--p", "2", "--f", "1+z^2", "--g", "1+z+z^2")[1] == \
        "quotient 1\nremainder z\n"
    assert run("poly", "roots", "--p", "5", "--f", "[4,0,1,0,1]")[1] == "{}\n"
    assert run("poly", "factor", "--p", "5", "--f", "4+z^2+z^4")[1] == "(3+z^2)*(3+z^2)\n"
    assert run("field", "--field", "p=2,f=[1,1,1]", "op", "--a", "1+z", "--b", "1+z",
               "--op", "mul")[1] == "z\n"
    assert run("field", "--p", "7", "mul-order", "--a", "3")[1] == "6\n"
    assert run("search", "--order", "6")[1].startswith("0 solutions\n")
    assert run("search", "--order", "5")[1].startswith("6 solutions\n")
    assert run("design", "verify", "--fixture", "nine-point-design")[1].startswith(
        "2-(9,3,1), b=12\n")
    assert run("code", "decode")[1] == "0110\n"
    assert run("code", "info", "--code", "fano-extended")[1].endswith("perfect: true\n")
    assert run("plane", "--q", "3", "--verify")[1] == "plane axioms hold\n"


def test_ambiguous_decode_message():
    code, _, err = run("code", "decode", "--code", "rep2", "--word", "01")
    assert code == 1 and "01" in err


@pytest.mark.parametrize("argv,kind,cls", [
    (["field", "--p", "3", "tables", "--format", "json"], "tables", OpTablePair),
    (["search", "--order", "5", "--json"], "search", SearchResult),
    (["plane", "--q", "2", "--format", "json"], "incidence", IncidenceStructure),
    (["design", "verify", "--fixture", "nine-point-design", "--format", "json"], "design",
     BlockDesign),
    (["code", "info", "--code", "fano-extended", "--json"], "code", Code),
    (["code", "simulate", "--p", "0.05", "--trials", "500", "--seed", "9", "--json"],
     "channel", ChannelReport),
])
def test_json_round_trip(argv, kind, cls):
    status, text, _ = run(*argv)
    assert status == 0
    obj = parse(text, kind)
    assert isinstance(obj, cls)
    assert serialize(obj, "json") == text


def test_json_is_canonical():
    text = run("field", "--p", "2", "tables", "--format", "json")[1]
    assert text == json.dumps(json.loads(text), sort_keys=True, separators=(",", ":")) + "\n"


@pytest.mark.parametrize("argv", [
    ["search", "--order", "7", "--json"],
    ["plane", "--q", "4", "--format", "dot"],
    ["code", "simulate", "--p", "0.2", "--trials", "2000", "--seed", "11", "--json"],
    ["design", "resolve", "--fixture", "nine-point-design"],
])
def test_byte_identical_reruns(argv):
    assert run(*argv) == run(*argv)


def test_dot_output():
    status, text, _ = run("plane", "--q", "2", "--format", "dot")
    assert status == 0
    assert text.startswith("graph incidence {")
    assert text.count(" -- ") == 21
    with pytest.raises(FormatError):
        serialize(Code(1, 2, ((0,), (1,))), "dot")


def test_max_solutions_only_trims_display():
    data = json.loads(run("search", "--order", "7", "--json", "--max-solutions", "2")[1])
    assert data["raw_count"] == 120 and len(data["solutions"]) == 2


def test_design_file(tmp_path):
    path = tmp_path / "d.json"
    path.write_text(json.dumps({"v": 4, "blocks": [[0, 1], [2, 3], [0, 2], [1, 3], [0, 3], [1, 2]]}))
    status, text, _ = run("design", "resolve", "--file", str(path))
    assert status == 0 and text.startswith("3 parallel classes\n")
    path.write_text(json.dumps({"v": 4, "blocks": [[0, 1], [2, 3]]}))
    assert run("design", "verify", "--file", str(path))[0] == 1


def test_console_script_module():
    r = subprocess.run([sys.executable, "-m", "fieldlab.cli", "mod", "order", "--n", "12",
                        "--a", "8"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout == "3\n"
