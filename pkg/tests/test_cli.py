import json

import pytest

from qheegaard.cli import main
from qheegaard.laurent import LaurentPoly1, LaurentPoly2


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_omega_json(capsys):
    code, out, _ = run(capsys, "omega", "s1^3", "-n", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert len(data["generators"]) == 5
    assert data["prefactor"] == {"ex2": 4, "ed": 3}
    assert LaurentPoly2.from_json(data["omega"]).to_text() == (
        "-1*x^(-2/2)*d^3 + 1*x^(0/2)*d^3 + -1*x^(2/2)*d^3 + 1*x^(4/2)*d^3 + -1*x^(4/2)*d^4"
    )
    assert data["jones"] == "-x^-4 + x^-3 + x^-1"


def test_omega_text_round_trips(capsys):
    code, out, _ = run(capsys, "omega", "s1 s2^-1 s1 s2^-1", "-n", "3")
    assert code == 0
    line = next(l for l in out.splitlines() if l.startswith("omega"))
    p = LaurentPoly2.from_text(line.split(None, 1)[1])
    _, js, _ = run(capsys, "omega", "s1 s2^-1 s1 s2^-1", "-n", "3", "--format", "json")
    assert p == LaurentPoly2.from_json(json.loads(js)["omega"])


def test_jones_and_alexander(capsys):
    code, out, _ = run(capsys, "jones", "s1^3", "-n", "2")
    assert code == 0
    assert out.splitlines() == ["-x^-4 + x^-3 + x^-1", "oracle: MATCH"]
    code, out, _ = run(capsys, "alexander", "s1^3", "-n", "2")
    assert code == 0 and LaurentPoly1.from_text(out.splitlines()[0]) == LaurentPoly1.from_text("x - 1 + x^-1")


def test_usage_errors_exit_2(capsys):
    code, _, err = run(capsys, "alexander", "s3", "-n", "3")
    assert code == 2 and json.loads(err)["error"] == "InvalidIndex"
    code, _, err = run(capsys, "omega", "s1 q", "-n", "3")
    assert code == 2 and json.loads(err)["error"] == "SyntaxError"
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == 2


def test_computation_errors_exit_1(capsys):
    code, _, err = run(capsys, "alexander", "s1^2", "-n", "2")
    assert code == 1 and json.loads(err)["error"] == "NotAKnot"
    code, out, err = run(capsys, "hfk", "s1 s2^-1 s1 s2^-1", "-n", "3")
    assert code == 1 and json.loads(err)["error"] == "NonBigonIndexOne"
    assert "oracle: MATCH" in out


def test_jones_budget_skips_oracle(capsys):
    code, out, _ = run(capsys, "jones", "s1^7", "-n", "2", "--budget", "3")
    assert code == 0 and out.splitlines()[1] == "oracle: SKIPPED"


def test_hfk_trefoil(capsys):
    code, out, _ = run(capsys, "hfk", "s1^3", "-n", "2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["total"] == 3
    assert {(e["maslov"], e["alexander"]) for e in data["entries"]} == {(-1, 0), (0, 1), (1, 2)}


def test_determinism(capsys):
    omegas = []
    for flags in ([], ["--no-reduce"]):
        outs = set()
        for _ in range(2):
            _, out, _ = run(capsys, "omega", "s1 s2^-1 s1 s2 s2^-1", "-n", "3", "--format", "json", *flags)
            outs.add(out)
        assert len(outs) == 1
        omegas.append(json.loads(outs.pop())["omega"])
    assert omegas[0] == omegas[1]


def test_diagram_and_render(capsys, tmp_path):
    code, out, _ = run(capsys, "diagram", "s1^3", "-n", "2", "--format", "json")
    assert code == 0 and json.loads(out)["genus"] == 1
    svg = tmp_path / "t.svg"
    assert main(["render", "s1^3", "-n", "2", "--out", str(svg)]) == 0
    text = svg.read_text()
    assert text.startswith("<svg") and "(0,1)" in text
    assert main(["render", "s1^3", "-n", "2", "--what", "diagram", "--out", str(svg)]) == 0
    assert "T0" in svg.read_text()
    code, out, _ = run(capsys, "render", "s1^3", "-n", "2", "--what", "dump")
    assert out.count("crossing ") == 5


def test_check_small_corpus(capsys, tmp_path):
    corpus = tmp_path / "c.txt"
    corpus.write_text("# tiny\ntre;2;s1^3;-x^-4 + x^-3 + x^-1;x - 1 + x^-1\nbad;2;s1^3;x;\n")
    code, out, err = run(capsys, "check", "--corpus", str(corpus), "--format", "json")
    data = json.loads(out)
    assert code == 1 and data["failed"] == ["bad"]
    assert data["entries"][0]["ok"] and json.loads(err)["error"] == "CheckFailed"
