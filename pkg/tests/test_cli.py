from __future__ import annotations

import json

import pytest

from k6minor.cli import main
from k6minor.graph import girth, parse_graph
from k6minor.minors import MinorModel, verify_model


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def gen(tmp_path, capsys, *args) -> str:
    path = tmp_path / ("_".join(args).replace("=", "") + ".txt")
    assert main(["gen", *args, "--out", str(path)]) == 0
    capsys.readouterr()
    return str(path)


def test_analyze(tmp_path, capsys):
    code, out = run(["analyze", gen(tmp_path, capsys, "named", "petersen")], capsys)
    props = json.loads(out)["properties"]
    assert code == 0 and props["girth"] == 5 and props["kappa"] == 3 and not props["planar"]
    code, out = run(["analyze", gen(tmp_path, capsys, "named", "c6")], capsys)
    props = json.loads(out)["properties"]
    assert props["girth"] == 6 and props["kappa"] == 2 and props["planar"]


def test_malformed_input(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("0 1\nnot an edge\n")
    assert main(["analyze", str(bad)]) == 2
    assert "error" in capsys.readouterr().err


def test_pipeline_writes_certificate(tmp_path, capsys):
    src = gen(tmp_path, capsys, "pg", "5")
    out = tmp_path / "report.json"
    assert main(["pipeline", "--variant", "girth6", src, "--out", str(out)]) == 0
    rep = json.loads(out.read_text())
    cert = json.loads(out.with_suffix(".cert.json").read_text())
    assert rep["certificate"] == cert and cert["verified"]
    g = parse_graph(open(src).read())
    assert verify_model(g, MinorModel.from_dict(cert))


@pytest.mark.parametrize("name,variant", [("c6", "girth6"), ("k6", "girth5")])
def test_pipeline_hypothesis_exit(tmp_path, capsys, name, variant):
    code, out = run(["pipeline", "--variant", variant, gen(tmp_path, capsys, "named", name)], capsys)
    assert code == 3 and json.loads(out)["hypotheses"]["holds"] is False


def test_generators(tmp_path, capsys):
    g = parse_graph(open(gen(tmp_path, capsys, "pg", "5")).read())
    assert (g.n, g.m) == (62, 186) and girth(g) == 6 and {g.degree(v) for v in range(g.n)} == {6}
    v8 = parse_graph(open(gen(tmp_path, capsys, "named", "v8")).read())
    assert (v8.n, v8.m) == (8, 12)
    a = open(gen(tmp_path, capsys, "random", "girth5", "n=30", "--seed", "1")).read()
    b = open(gen(tmp_path, capsys, "random", "girth5", "n=30", "--seed", "1")).read()
    g = parse_graph(a)
    assert a == b and girth(g) >= 5 and g.min_degree >= 3


def test_report_digest_is_stable(tmp_path, capsys):
    src = gen(tmp_path, capsys, "named", "petersen")
    first = json.loads(run(["find-minor", "--target", "k5", src], capsys)[1])
    second = json.loads(run(["find-minor", "--target", "k5", src], capsys)[1])
    assert first["result"] == "found" and first["certificate"]["verified"]
    assert first["digest"] == second["digest"]


def test_census_exit_codes(capsys):
    code, out = run(["census", "--lemma", "dis:girth6", "--n-max", "10"], capsys)
    assert code == 0 and json.loads(out)["census"]["violations"] == []
    code, out = run(["census", "--lemma", "fat2", "--n-max", "7"], capsys)
    assert code == 4 and json.loads(out)["census"]["violations"]
    code, _ = run(["census", "--lemma", "nonsense", "--n-max", "5"], capsys)
    assert code == 2
