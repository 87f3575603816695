import json
import subprocess
import sys

import pytest
from hypothesis import given

from artifact import cli
from artifact.formulas import (InputSeries, genus0_inputs, genus0_smooth, gk_formula, required_input_degrees,
                               theorem_C, weight_bound)
from artifact.graphs import TorusGraph
from artifact.scalars import L, MotivicScalar
from artifact.seriesio import (SchemaError, load_fixtures, load_series, save_series, series_from_json,
                               series_to_json, dumps)
from artifact.symfunc import GradedSeries, SymFunc
from strategies import graded, symfuncs


def roundtrip(value, basis="powersum", **kw):
    return series_from_json(dumps(series_to_json(value, basis, **kw)))


@given(symfuncs(N=5))
def test_symfunc_round_trip(f):
    back = roundtrip(f)
    assert back == f and back.N == f.N
    assert roundtrip(f, "schur") == f


@given(graded(cap=6))
def test_graded_round_trip(f):
    back = roundtrip(f)
    assert back == f and back.cap == f.cap


def test_inputs_round_trip(tmp_path):
    inp = InputSeries.random(2, 3, seed=2)
    path = tmp_path / "a.json"
    save_series(inp, path)
    back = load_series(path)
    assert isinstance(back, InputSeries)
    assert back.provenance == inp.provenance
    for h, f in inp.entries.items():
        assert back.entries[h] == f and back.entries[h].cap == f.cap


def test_symbols_survive(tmp_path):
    c = MotivicScalar.symbol("S", 3) * L + MotivicScalar.symbol("S") ** 2
    f = SymFunc({(2, 1): c}, 3)
    assert roundtrip(f) == f


def _doc(entries, kind="inputs", N=4, basis="powersum"):
    return json.dumps({"header": {"kind": kind, "N": N, "basis": basis, "generators": ["L"]},
                       "entries": entries}, indent=1)


def test_support_rule_rejected_with_line():
    text = _doc([{"genus": 0, "n": 3, "terms": [{"partition": [3], "scalar": [[1, 1, []]]}]},
                 {"genus": 0, "n": 2, "terms": [{"partition": [1, 1], "scalar": [[1, 1, []]]}]}])
    with pytest.raises(SchemaError) as err:
        series_from_json(text)
    lines = text.splitlines()
    assert err.value.line is not None
    assert lines[err.value.line - 1].strip() == "{"
    assert '"n": 2' in lines[err.value.line + 1]
    ok = series_from_json(text, allow_unsupported=True)
    assert ok.get(0)[(1, 1)] == 1


def test_schur_file_converted():
    text = _doc([{"genus": 0, "n": 4, "terms": [
        {"partition": [4], "scalar": [[1, 1, [["L", 1, 1]]]]},
        {"partition": [2, 2], "scalar": [[-1, 1, []]]}]}], basis="schur")
    inp = series_from_json(text)
    assert inp.get(0) == genus0_smooth(4).degree_part(4)


def test_line_precise_errors():
    text = _doc([{"genus": 0, "n": 3, "terms": [
        {"partition": [3], "scalar": [[1, 1, []]]},
        {"partition": [2, 2], "scalar": [[1, 1, []]]}]}])
    with pytest.raises(SchemaError) as err:
        series_from_json(text)
    lines = text.splitlines()
    assert "does not have size" in str(err.value)
    assert '"partition"' in lines[err.value.line - 1]
    assert "2," in lines[err.value.line] or "2" in lines[err.value.line]
    with pytest.raises(SchemaError) as err:
        series_from_json('{"header": {},\n "entries": [\n  1,\n]}')
    assert err.value.line == 4
    with pytest.raises(SchemaError, match="scalar"):
        series_from_json(_doc([{"genus": 1, "n": 1, "terms": [{"partition": [1], "scalar": "x"}]}]))


def test_fixtures_absent(tmp_path, monkeypatch):
    monkeypatch.setenv("ARTIFACT_FIXTURES", str(tmp_path))
    assert load_fixtures() is None


def test_fixture_provenance_enforced(tmp_path):
    f = SymFunc({(1,): 1}, 3)
    save_series(InputSeries({1: f}, {1: "random-formal"}), tmp_path / "a1.json")
    with pytest.raises(SchemaError, match="fixture"):
        load_fixtures(genera=(1,), directory=tmp_path)
    save_series(InputSeries({1: f}, {1: "fixture"}), tmp_path / "a1.json")
    assert load_fixtures(genera=(1,), directory=tmp_path).get(1) == f


# ---------------------------------------------------------------- command line

def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_genus0_command(capsys):
    code, out, _ = run(["genus0", "--max-n", "5", "--basis", "schur"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "g=0 n=3: s[3]"
    assert lines[1] == "g=0 n=4: L*s[4] - s[2 2]"


def test_thmB_genus0_table(capsys):
    code, out, _ = run(["thmB", "--max-genus", "0", "--max-n", "4"], capsys)
    assert code == 0
    assert "g=0 n=4: (L + 1)*s[4]" in out


def test_maps_command(capsys):
    argv = ["maps", "--target-pr", "2", "--degree", "1", "--max-genus", "1", "--max-n", "3", "--format", "json"]
    code, out, _ = run(argv, capsys)
    assert code == 0
    need = required_input_degrees(1, 3)[0]
    abar = gk_formula(genus0_inputs(need), 1, 3)
    expect = theorem_C(TorusGraph.projective_space(2), (1,), abar, g_max=1).truncate(weight_bound(1, 3))
    got = series_from_json(out)
    for g in (0, 1):
        assert got.coefficient(g - 1) == expect.coefficient(g - 1).restrict(degree=3)


def test_exit_codes(capsys, tmp_path):
    assert run(["bogus"], capsys)[0] == 1
    assert run(["thmB", "--max-n", "x"], capsys)[0] == 1
    assert run(["thmA", "--genus", "1", "--max-n", "2"], capsys)[0] == 1
    assert run(["thmB", "--inputs", str(tmp_path / "missing.json")], capsys)[0] == 1
    bad = tmp_path / "bad.json"
    bad.write_text('{"header": {"kind": "inputs"}, "entries": [}')
    code, _, err = run(["thmB", "--inputs", str(bad)], capsys)
    assert code == 1 and "line" in err
    short = tmp_path / "short.json"
    save_series(InputSeries({0: genus0_smooth(4)}), short)
    code, _, err = run(["thmB", "--inputs", str(short), "--max-genus", "2", "--max-n", "3"], capsys)
    assert code == 1 and "needs" in err


def test_selftest_command(capsys):
    code, out, _ = run(["selftest"], capsys)
    assert code == 0 and "FAIL" not in out


def test_out_flag_and_json(capsys, tmp_path):
    target = tmp_path / "o.json"
    code, out, _ = run(["gk", "--max-genus", "1", "--max-n", "3", "--format", "json", "--out", str(target)], capsys)
    assert code == 0 and out == ""
    loaded = load_series(target)
    assert isinstance(loaded, GradedSeries)


def test_orbisum_and_ppchar_commands(capsys, tmp_path):
    code, out, _ = run(["orbisum", "--degree", "1"], capsys)
    assert code == 0
    assert out.splitlines()[0].split() == ["{()", "->", "(1)}", "1"]
    assert sum(1 for line in out.splitlines() if line.endswith("1/2")) == 4
    g = tmp_path / "theta.json"
    g.write_text(json.dumps({"vertices": [{"weight": 0}, {"weight": 0}], "edges": [[0, 1]] * 3}))
    code, out, _ = run(["ppchar", "--inputs", str(g)], capsys)
    assert code == 0 and "1/12" in out


def _cli(args, env=None):
    import os
    e = dict(os.environ)
    e.update(env or {})
    return subprocess.run([sys.executable, "-m", "artifact.cli"] + args, capture_output=True, text=True, env=e)


def test_deterministic_across_runs_and_threads():
    args = ["thmB", "--max-genus", "2", "--max-n", "2", "--format", "json"]
    a = _cli(args, {"ARTIFACT_THREADS": "1"})
    b = _cli(args, {"ARTIFACT_THREADS": "4"})
    c = _cli(args)
    assert a.returncode == 0
    assert a.stdout == b.stdout == c.stdout
    bad = _cli(args, {"ARTIFACT_THREADS": "zero"})
    assert bad.returncode == 1
