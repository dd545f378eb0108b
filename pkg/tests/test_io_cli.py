import json
import random
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest

from graphzeta import Preset, hashimoto_polynomial
from graphzeta.algebra import QQ, QQ_q
from graphzeta.cli import CommandConfig, UsageError, main, parse_args, run_command
from graphzeta.io import (
    SpecError,
    evaluate_spec_q,
    fixture_path,
    load_fixture,
    parse_graph_spec,
    parse_spec,
    parse_weight,
    serialize_spec,
)

from _instances import WORKED_ARCS, rand_rational

GOLDEN = Path(__file__).parent / "golden"
FIXTURE = str(fixture_path())


def doc(arcs, vertices=("x", "y"), **scheme):
    return json.dumps({"vertices": list(vertices),
                       "arcs": [dict(zip(("tail", "head"), a[:2]), **(a[2] if len(a) > 2 else {}))
                                for a in arcs],
                       "scheme": scheme})


# -- weights ---------------------------------------------------------------------

@pytest.mark.parametrize("text,value", [
    ("3", 3), ("-2/6", Fraction(-1, 3)), (" (1 + 2) * 3 ", 9), ("2^3 - 1", 7), (5, 5),
])
def test_parse_weight_rational(text, value):
    v, uses_q = parse_weight(text)
    assert v == value and not uses_q


def test_parse_weight_symbolic():
    q = QQ_q.gen()
    v, uses_q = parse_weight("1 - q")
    assert uses_q and v == 1 - q
    assert parse_weight("(1-q)^2/(1+q)")[0] == (1 - q) * (1 - q) / (1 + q)


@pytest.mark.parametrize("bad", [0.5, "0.5", "1/0", "q q", "(1", "2 +", "x", True, None, [1]])
def test_parse_weight_rejects(bad):
    with pytest.raises((SpecError, ZeroDivisionError)):
        parse_weight(bad)


# -- documents --------------------------------------------------------------------

def test_fixture_is_worked_example():
    spec = load_fixture()
    assert spec.digraph.arcs == WORKED_ARCS
    assert spec.arc_names == tuple(f"a{k}" for k in range(1, 9))
    assert spec.vertex_names == ("v1", "v2", "v3")
    assert spec.scheme.preset is Preset.GENERAL
    assert set(spec.scheme.tau) == {1} and set(spec.scheme.upsilon) == {1}


def test_preset_defaults():
    text = doc([("x", "y", {"tau": "2"}), ("y", "x", {"tau": "3"})])
    assert parse_spec(text, preset="MIZUNO_SATO").scheme.upsilon == (2, 3)
    assert parse_spec(text, preset="BOWEN_LANFORD").scheme.upsilon == (0, 0)
    assert parse_spec(text, preset="SATO").scheme.upsilon == (1, 1)
    bart = parse_spec(doc([("x", "y"), ("y", "x")]), preset="BARTHOLDI")
    assert bart.scheme.field == QQ_q
    assert bart.scheme.upsilon == (1 - QQ_q.gen(),) * 2
    at = parse_spec(doc([("x", "y"), ("y", "x")]), preset=Preset.BARTHOLDI, eval_q="2/3")
    assert at.scheme.field == QQ and at.scheme.upsilon == (Fraction(1, 3),) * 2
    assert evaluate_spec_q(bart, "2/3").scheme == at.scheme


def test_document_q_and_conflicts():
    text = doc([("x", "x")], vertices=("x",), preset="BARTHOLDI", q="1/2")
    assert parse_spec(text).scheme.describe() == "BARTHOLDI(q=1/2)"
    with pytest.raises(SpecError):
        parse_spec(text, eval_q="1/3")
    with pytest.raises(SpecError):
        parse_spec(doc([("x", "x", {"tau": "q"})], vertices=("x",)), eval_q="1/3")


@pytest.mark.parametrize("text", [
    "not json", "[]", '{"vertices": ["a", "a"], "arcs": []}',
    '{"vertices": ["a"], "arcs": [{"tail": "a", "head": "b"}]}',
    '{"vertices": ["a"], "arcs": {}}',
    '{"version": 2, "vertices": [], "arcs": []}',
    '{"vertices": ["a"], "arcs": [{"tail": "a", "head": "a", "tau": 0.5}]}',
    '{"vertices": ["a"], "arcs": [{"id": "e", "tail": "a", "head": "a"}, {"id": "e", "tail": "a", "head": "a"}]}',
    '{"vertices": ["a"], "arcs": [], "scheme": {"preset": "NOPE"}}',
    '{"vertices": ["a"], "arcs": [{"tail": "a", "head": "a", "tau": "2"}], "scheme": {"preset": "IHARA"}}',
])
def test_parse_spec_errors(text):
    with pytest.raises(SpecError):
        parse_spec(text)


def test_serialize_roundtrip():
    rng = random.Random(6)
    arcs = [("x", "y"), ("y", "x"), ("x", "x"), ("y", "y"), ("x", "y")]
    items = [(u, v, {"tau": QQ.format(rand_rational(rng)), "upsilon": QQ.format(rand_rational(rng))})
             for u, v in arcs]
    spec = parse_spec(doc(items))
    text = serialize_spec(spec)
    again = parse_spec(text)
    assert again.digraph == spec.digraph and again.scheme == spec.scheme
    assert serialize_spec(again) == text
    bart = load_fixture(preset="BARTHOLDI")
    assert parse_spec(serialize_spec(bart)).scheme == bart.scheme


def test_serialize_bartholdi_type_roundtrip():
    text = doc([("x", "y", {"tau": "2", "upsilon": "3"}), ("y", "x")], bartholdi_type=True)
    spec = parse_spec(text)
    assert spec.scheme.upsilon[0] == 3 * (1 - QQ_q.gen())
    again = parse_spec(serialize_spec(spec))
    assert again.scheme == spec.scheme and again.bartholdi_type


def test_graph_spec():
    g = parse_graph_spec(json.dumps({
        "vertices": ["a", "b", "c"],
        "edges": [["a", "b"], {"u": "b", "v": "c", "tau_uv": "2", "tau_vu": "1/2"}],
    }))
    assert g.graph.edges == ((0, 1), (1, 2))
    assert g.weights == {(1, 2): 2, (2, 1): Fraction(1, 2)}
    with pytest.raises(SpecError):
        parse_graph_spec('{"vertices": ["a"], "edges": [["a"]]}')


# -- CLI ---------------------------------------------------------------------------

def run(*argv):
    return run_command(parse_args(list(argv)))


@pytest.mark.parametrize("name,argv", [
    ("verify_worked_example", ["verify", "--input", FIXTURE]),
    ("series_worked_example", ["series", "--input", FIXTURE, "-T", "6"]),
    ("verify_worked_example_bartholdi", ["verify", "--input", FIXTURE, "--scheme", "BARTHOLDI"]),
])
def test_golden_outputs(name, argv):
    code, text = run(*argv)
    assert code == 0
    assert text.encode() == (GOLDEN / f"{name}.txt").read_bytes()


def test_hashimoto_and_ihara_commands():
    code, text = run("hashimoto", "-i", FIXTURE, "--format", "coeffs")
    assert (code, text) == (0, "1,0,0,-2,-4\n")
    code, text = run("ihara", "-i", FIXTURE, "--format", "json")
    assert code == 0 and json.loads(text) == {"ihara": ["1", "0", "0", "-2", "-4"], "scheme": "GENERAL"}
    code, text = run("hashimoto", "-i", FIXTURE, "--scheme", "BARTHOLDI", "--eval-q", "0")
    assert code == 0 and "BARTHOLDI(q=0)" in text and "1 - 2*t^3 - 4*t^4" in text


def test_verify_json():
    code, text = run("verify", "-i", FIXTURE, "--format", "json")
    out = json.loads(text)
    assert code == 0 and out["match"] is True and out["T"] is None
    assert out["hashimoto"] == out["ihara"]


def test_nm_and_lyndon():
    assert run("nm", "-i", FIXTURE, "-T", "4") == (0, "N_1 = 0\nN_2 = 0\nN_3 = 6\nN_4 = 16\n")
    assert run("lyndon", "--alphabet", "2", "-T", "2") == (0, "1; 2; 12\n")
    assert run("lyndon", "--alphabet", "2", "-T", "3", "--format", "json")[0] == 0


def test_exit_codes(tmp_path):
    sato = tmp_path / "sato.json"
    sato.write_text(doc([("x", "y", {"tau": "2"}), ("y", "x")], preset="SATO"))
    assert run("series", "-i", FIXTURE)[0] == 3  # 8^10 paths exceed the default bound
    assert run("nm", "-i", FIXTURE, "-T", "3", "--max-paths", "100")[0] == 3
    assert run("verify", "-i", FIXTURE, "--scheme", "BOWEN_LANFORD", "--reduced")[0] == 4
    # all-ones weights have tau = upsilon, so the reduced condition holds
    assert run("verify", "-i", FIXTURE, "--reduced")[0] == 0
    assert run("verify", "-i", str(sato), "--reduced")[0] == 4
    assert run("nm", "-i", str(sato), "--reduced", "-T", "2") == (0, "N_1 = 0\nN_2 = 0\n")
    assert run("verify", "-i", FIXTURE, "--scheme", "MIZUNO_SATO", "--reduced")[0] == 0
    assert run("verify", "-i", "/nonexistent.json")[0] == 1
    assert run("verify")[0] == 1
    assert run("verify", "-i", FIXTURE, "--scheme", "NOPE")[0] == 1
    assert run("lyndon", "-T", "0")[0] == 1


def test_usage_errors():
    with pytest.raises(UsageError):
        parse_args(["frobnicate"])
    with pytest.raises(UsageError):
        parse_args(["verify", "-T", "x"])
    with pytest.raises(UsageError):
        CommandConfig("verify", order=-1)
    assert main(["frobnicate"]) == 1


def test_classical_command(tmp_path):
    g = tmp_path / "k4.json"
    g.write_text(json.dumps({"vertices": list("abcd"),
                             "edges": [[u, v] for i, u in enumerate("abcd") for v in "abcd"[i + 1:]]}))
    code, text = run("classical", "-i", str(g), "--format", "coeffs")
    assert code == 0
    assert text == "1,0,0,-8,-6,0,16,24,-3,-16,-24,0,16\n"
    assert run("classical", "-i", str(g), "--scheme", "BARTHOLDI", "--eval-q", "0",
               "--format", "coeffs")[1] == text
    assert run("classical", "-i", str(g), "--scheme", "WHAT")[0] == 1


def test_mismatch_exit_code(monkeypatch):
    import graphzeta.cli as cli
    monkeypatch.setattr(cli, "ihara_polynomial", lambda d, s: hashimoto_polynomial(d, s) * 2)
    code, text = run("verify", "-i", FIXTURE)
    assert code == 2 and text.endswith("MISMATCH\n")


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "graphzeta", "verify", "--input", FIXTURE],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert out.stdout == (GOLDEN / "verify_worked_example.txt").read_text()
    bad = subprocess.run([sys.executable, "-m", "graphzeta", "series", "--input", FIXTURE],
                         capture_output=True, text=True)
    assert bad.returncode == 3 and bad.stdout == "" and "exceeds" in bad.stderr
