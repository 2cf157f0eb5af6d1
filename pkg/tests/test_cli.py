import json

import pytest

from squeeze import Monomial, MonomialIdeal
from squeeze.cli import RunConfig, main, parse_args, UsageError
from squeeze.io import FormatError, format_U, parse_facets_text, parse_ideal_text, parse_U_text

U5_FILE = "m=3\n1\nx1\nx2\nx3\nx1*x3\nx2*x3\nx3^2\n"
OCTA_FILE = "n=6\n" + "".join(f"{a} {b} {c}\n" for a in (1, 2) for b in (3, 4) for c in (5, 6))
BALL_IDEAL = "# I of the ball\nx1*x3\nx1*x4\n\nx2*x4\nx1*x5*x7\nx2*x5*x7\nx3*x5*x7\n"


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in [("u.txt", U5_FILE), ("octa.txt", OCTA_FILE), ("ball.txt", BALL_IDEAL),
                       ("gin.txt", "x1^2\nx1*x2\nx2^2\nx1*x3^2\nx2*x3^2\nx3^4\n"), ("bad.txt", "m=2\n1\nx1\nx2\nx1^2\n")]:
        p = tmp_path / name
        p.write_text(text)
        paths[name] = str(p)
    return paths


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    lines = [json.loads(line) for line in out.out.splitlines() if line.strip()]
    return code, lines, out.err


def test_formats():
    U = parse_U_text(U5_FILE)
    assert U.m == 3 and len(U) == 7
    assert parse_U_text(format_U(U)) == U
    assert parse_ideal_text(BALL_IDEAL).max_var == 7
    assert parse_facets_text(OCTA_FILE).dim == 2
    for bad in ["1\nx1\n", "m=x\n1\n"]:
        with pytest.raises(FormatError):
            parse_U_text(bad)
    with pytest.raises(FormatError):
        parse_facets_text("n=3\n1 2 q\n")
    with pytest.raises(FormatError):
        parse_ideal_text("x1*y2\n")


def test_parse_args():
    cfg = parse_args(["build", "--U", "u.txt", "--d", "5"])
    assert isinstance(cfg, RunConfig) and cfg.command == "build" and cfg.d == 5 and cfg.seed == 1
    cfg = parse_args(["gin", "--ideal", "i.txt", "--n", "9", "--maxdeg", "4"])
    assert (cfg.n, cfg.maxdeg, cfg.field) == (9, 4, "q")
    with pytest.raises(UsageError):
        parse_args(["build", "--U", "u.txt"])
    with pytest.raises(UsageError):
        parse_args(["build", "--U", "u.txt", "--d", "5", "--bogus"])
    with pytest.raises(UsageError):
        parse_args(["enumerate", "--m", "2", "--maxdeg", "2", "--n", "9", "--d", "5"])


def test_seed_from_environment(monkeypatch):
    monkeypatch.setenv("SQUEEZE_SEED", "17")
    assert parse_args(["verify", "--suite", "paper-examples"]).seed == 17
    assert parse_args(["verify", "--suite", "paper-examples", "--seed", "3"]).seed == 3


def test_build_and_betti(capsys, files):
    code, [rep], _ = run(capsys, "build", "--U", files["u.txt"], "--d", "5")
    assert code == 0 and rep["n"] == 9 and [1, 2, 5, 6, 8, 9] in rep["facets"]
    assert set(rep["meta"]) == {"command", "input_hash", "seed", "field", "version"}
    code, [rep], _ = run(capsys, "betti", "--U", files["u.txt"], "--d", "5")
    assert code == 0 and {"i": 3, "j": 9, "value": 1} in rep["betti"]
    code, [rep], _ = run(capsys, "betti", "--facets", files["octa.txt"])
    assert rep["betti"] == [{"i": 0, "j": 2, "value": 3}, {"i": 1, "j": 4, "value": 3}, {"i": 2, "j": 6, "value": 1}]
    code, [rep], _ = run(capsys, "betti", "--ideal", files["gin.txt"])
    assert code == 0 and rep["source"] == "eliahou-kervaire"


def test_reports_are_byte_identical(capsys, files):
    main(["gin", "--ideal", files["ball.txt"], "--n", "9", "--maxdeg", "3", "--field", "p"])
    first = capsys.readouterr().out
    main(["gin", "--ideal", files["ball.txt"], "--n", "9", "--maxdeg", "3", "--field", "p"])
    assert capsys.readouterr().out == first
    rep = json.loads(first)
    assert rep["gin"] == ["x1^2", "x1*x2", "x2^2", "x1*x3^2", "x2*x3^2", "x3^3"]
    assert rep["seeds_agreeing"] == 2 and rep["meta"]["field"] == "p"


def test_sphere_commands(capsys, files):
    code, [rep], _ = run(capsys, "usets", "--facets", files["octa.txt"], "--d", "3")
    assert code == 0 and rep["U"] == ["1", "x1", "x2"] and rep["lefschetz"]["weak"]
    code, [rep], _ = run(capsys, "sq", "--facets", files["octa.txt"], "--d", "3")
    assert code == 0 and rep["f_vector_preserved"] and rep["n"] == 6
    code, [rep], _ = run(capsys, "eshift", "--facets", files["octa.txt"])
    assert code == 0 and rep["ideal"][0] == "x1*x2"
    code, [rep], _ = run(capsys, "boundary", "--facets", files["octa.txt"])
    assert code == 0 and rep["facets"] == []


def test_enumerate_and_chara5(capsys, files):
    code, lines, _ = run(capsys, "enumerate", "--m", "2", "--maxdeg", "2", "--check-conj", "--d", "4")
    assert code == 0 and lines[-1]["count"] == 4
    assert all(line["check"] == "pass" for line in lines[:-1])
    code, [rep], _ = run(capsys, "chara5", "--ideal", files["gin.txt"], "--n", "6", "--d", "3")
    assert code == 0 and rep["holds"]


def test_exit_codes(capsys, files, tmp_path):
    assert main(["build", "--U", files["u.txt"]]) == 2
    assert main(["build", "--U", files["bad.txt"], "--d", "4"]) == 2
    assert main(["build", "--U", files["u.txt"], "--d", "5", "--n", "10"]) == 2
    assert main(["build", "--U", str(tmp_path / "missing.txt"), "--d", "5"]) == 2
    assert main(["enumerate", "--m", "5", "--maxdeg", "2"]) == 3
    assert main(["chara5", "--ideal", files["ball.txt"], "--n", "9", "--d", "5"]) == 2
    capsys.readouterr()


def test_out_file(files, tmp_path, capsys):
    out = tmp_path / "facets.json"
    assert main(["build", "--U", files["u.txt"], "--d", "5", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["n"] == 9
    assert capsys.readouterr().out == ""


def test_verify_suite(capsys):
    code, [rep], _ = run(capsys, "verify", "--suite", "paper-examples")
    assert code == 0 and rep["passed"]
    assert len(rep["checks"]) == 11 and all(c["passed"] for c in rep["checks"])
