"""Command-line behaviour: chains between commands, exit codes, determinism.

Claims covered:
    - gen -> validate -> analyze -> frieze -> check-frieze all accept each
      other's files
    - exit codes: 1 for semantic failures, 2 for malformed input, 3 for budget
    - identical inputs and flags give byte-identical output
"""

import json

import pytest

from sl3frieze.cli import main
from sl3frieze.family import dump_family, load_family, make_family
from sl3frieze.cyclic import GroundSet
from sl3frieze.fixtures import INTRO_ROWS, canonical_family, intro_frieze
from sl3frieze.frieze import dump_frieze


@pytest.fixture()
def run(capsys):
    def _run(*args, expect=0):
        code = main([str(a) for a in args])
        out = capsys.readouterr()
        assert code == expect, (args, code, out.err)
        return out.out, out.err
    return _run


@pytest.fixture()
def fam8(tmp_path):
    path = tmp_path / "fam8.json"
    path.write_text(dump_family(canonical_family(8)))
    return path


def test_validate_maximal_family(run, fam8):
    out, _ = run("validate", fam8)
    assert "maximal weakly separated (16 = 3*8-8)" in out


def test_validate_reports_crossing_pair(run, tmp_path):
    fam = make_family(GroundSet(6), [(1, 2, 3), (1, 3, 5), (2, 4, 6)], validate=False)
    path = tmp_path / "crossing.json"
    path.write_text(dump_family(fam))
    out, _ = run("validate", path, expect=1)
    assert "(1, 3, 5)" in out and "(2, 4, 6)" in out


def test_validate_reports_non_maximal(run, tmp_path):
    fam = make_family(GroundSet(6), [(1, 2, 3)], validate=False)
    path = tmp_path / "small.json"
    path.write_text(dump_family(fam))
    out, _ = run("validate", path, expect=1)
    assert "not maximal" in out


def test_validate_rejects_truncated_json(run, tmp_path):
    path = tmp_path / "trunc.json"
    path.write_text('{"n": 8, "triangles": [[1,2')
    _, err = run("validate", path, expect=2)
    assert "JSON" in err


def test_analyze_orders_triangulation_points(run, fam8):
    out, _ = run("analyze", fam8, "--x", "3")
    line = next(l for l in out.splitlines() if l.startswith("triangulation points:"))
    pts = [int(p) for p in line.split(":")[1].split()]
    assert pts[0] == 4 and pts[-1] == 2  # x+1 first, x-1 last


def test_analyze_range_check(run, fam8):
    _, err = run("analyze", fam8, "--x", "0", expect=2)
    assert "1..8" in err


def test_analyze_rejects_non_maximal(run, tmp_path):
    fam = make_family(GroundSet(6), [(1, 2, 3)], validate=False)
    path = tmp_path / "small.json"
    path.write_text(dump_family(fam))
    run("analyze", path, "--x", "1", expect=1)


def test_frieze_text_self_validates(run, fam8):
    out, _ = run("frieze", fam8)
    assert "SL3: ok; tame: ok; integral: yes; positive: yes" in out


def test_frieze_json_round_trips_through_check(run, fam8, tmp_path):
    out, _ = run("frieze", fam8, "--format", "json")
    payload = json.loads(out)
    assert payload["validation"]["sl3"] is True
    frieze_path = tmp_path / "fz.json"
    frieze_path.write_text(out)
    out2, _ = run("check-frieze", frieze_path)
    assert "valid tame SL3-frieze" in out2


def test_check_frieze_accepts_fixture(run, tmp_path):
    path = tmp_path / "intro.json"
    path.write_text(dump_frieze(intro_frieze()))
    out, _ = run("check-frieze", path)
    assert "valid tame SL3-frieze: width 4, period 8" in out


def test_check_frieze_reports_coordinates(run, tmp_path):
    rows = [list(r) for r in INTRO_ROWS]
    rows[2][5] += 1
    path = tmp_path / "broken.json"
    path.write_text(json.dumps({"n": 8, "rows": [[str(v) for v in r] for r in rows]}))
    out, _ = run("check-frieze", path, expect=1)
    assert "det" in out and "row" in out


def test_check_frieze_rejects_width_zero(run, tmp_path):
    path = tmp_path / "w0.json"
    path.write_text(json.dumps({"n": 4, "rows": []}))
    run("check-frieze", path, expect=2)


def test_oracle_family_member_is_one(run, fam8):
    out, _ = run("oracle", fam8, "--triangle", "1,2,3")
    assert out.strip().endswith("= 1")


def test_oracle_matches_frieze_entry(run, fam8):
    out, _ = run("frieze", fam8, "--format", "json")
    rows = json.loads(out)["rows"]
    # row 1, position 2 holds the value of {2,3,5}
    out2, _ = run("oracle", fam8, "--triangle", "2,3,5")
    assert out2.strip().endswith(f"= {rows[0][1]}")
    # {x-1,x+1,x+2} for x=2 is {1,3,4}, the top row at position 3
    out3, _ = run("oracle", fam8, "--triangle", "1,3,4")
    assert out3.strip().endswith(f"= {rows[3][2]}")


def test_oracle_rejects_repeated_index(run, fam8):
    _, err = run("oracle", fam8, "--triangle", "1,1,6", expect=2)
    assert "distinct" in err


def test_oracle_budget_env(run, fam8, monkeypatch):
    monkeypatch.setenv("FRIEZE_ORACLE_BUDGET", "0")
    _, err = run("oracle", fam8, "--triangle", "1,4,7", expect=3)
    assert "budget" in err.lower()


def test_gen_rejects_small_n(run):
    _, err = run("gen", "--n", "5", expect=2)
    assert "n >= 6" in err


def test_gen_zero_steps_is_canonical(run, tmp_path):
    out_path = tmp_path / "g.json"
    run("gen", "--n", "8", "--steps", "0", "--out", out_path)
    assert load_family(out_path.read_text()).triangles == canonical_family(8).triangles


def test_gen_deterministic_bytes(run, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run("gen", "--n", "7", "--steps", "9", "--seed", "5", "--out", a)
    run("gen", "--n", "7", "--steps", "9", "--seed", "5", "--out", b)
    assert a.read_bytes() == b.read_bytes()


def test_reports_deterministic_bytes(run, fam8):
    first, _ = run("frieze", fam8, "--format", "json")
    second, _ = run("frieze", fam8, "--format", "json")
    assert first == second
    a1, _ = run("analyze", fam8, "--x", "5", "--format", "json")
    a2, _ = run("analyze", fam8, "--x", "5", "--format", "json")
    assert a1 == a2


def test_trace_replay_chain(run, tmp_path):
    base = tmp_path / "base.json"
    walked = tmp_path / "walked.json"
    trace = tmp_path / "trace.txt"
    replayed = tmp_path / "replayed.json"
    run("gen", "--n", "8", "--steps", "0", "--out", base)
    run("gen", "--n", "8", "--steps", "6", "--seed", "2", "--out", walked, "--trace-out", trace)
    run("mutate", base, "--replay", trace, "--out", replayed)
    assert walked.read_bytes() == replayed.read_bytes()


def test_trace_replay_rejects_tampered_value(run, tmp_path, fam8):
    base = tmp_path / "base.json"
    trace = tmp_path / "trace.txt"
    run("gen", "--n", "8", "--steps", "0", "--out", base)
    run("gen", "--n", "8", "--steps", "1", "--seed", "2", "--trace-out", trace,
        "--out", tmp_path / "ignore.json")
    line = trace.read_text().strip()
    head, _ = line.rsplit("value=", 1)
    trace.write_text(head + "value=999\n")
    _, err = run("mutate", base, "--replay", trace, expect=1)
    assert "mismatch" in err


def test_trace_replay_rejects_malformed_line(run, tmp_path, fam8):
    trace = tmp_path / "trace.txt"
    trace.write_text("not a trace line\n")
    run("mutate", fam8, "--replay", trace, expect=2)


def test_star_graph_realization_chain(run, fam8, tmp_path):
    out, _ = run("analyze", fam8, "--x", "2", "--format", "json")
    sg = json.loads(out)["star_graph"]
    sg_path = tmp_path / "sg.json"
    sg_path.write_text(json.dumps(sg))
    fam_path = tmp_path / "realized.json"
    run("gen", "--star-graph-file", sg_path, "--out", fam_path)
    out2, _ = run("analyze", fam_path, "--x", "2", "--format", "json")
    assert json.loads(out2)["star_graph"] == sg


def test_gen_rejects_unrealizable_star_graph(run, tmp_path):
    sg_path = tmp_path / "bad.json"
    # triangulation points {2,5,8} induce a path: condition (i)
    sg_path.write_text(json.dumps(
        {"x": 1, "n": 8, "edges": [[2, 5], [5, 8], [2, 3], [7, 8]]}))
    _, err = run("gen", "--star-graph-file", sg_path, expect=1)
    assert "condition (i)" in err


def test_json_outputs_carry_schema_version(run, fam8):
    for args in (("validate", fam8, "--format", "json"),
                 ("analyze", fam8, "--x", "1", "--format", "json"),
                 ("frieze", fam8, "--format", "json"),
                 ("oracle", fam8, "--triangle", "1,2,3", "--format", "json")):
        out, _ = run(*args)
        assert json.loads(out)["schema_version"] == 1
