import io
import json
import subprocess
import sys

import pytest

from partialshift.cli import SUITES, exit_code, parse_config, preset_config, run
from partialshift.report import FAIL, INCONCLUSIVE, PASS, Report
from partialshift.shift_space import InputError, Side

GM_INI = """
[system]
alphabet = a b
kind = matrix
matrix = 1 1; 1 0

[bounds]
resolution = 2,2
radius = 2
basis = 2,3
basis_d = 4
coverage_floor = 0.9
depth = 8
seed = 7
"""


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def write(tmp_path, text, name="sys.ini"):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_parse_matrix_config():
    cfg = parse_config(GM_INI)
    assert cfg.alphabet == ("a", "b") and cfg.kind == "matrix"
    assert cfg.data == ((1, 1), (1, 0))
    assert cfg.resolution == (2, 2) and cfg.basis == (2, 3) and cfg.seed == 7 and cfg.depth == 8
    assert cfg.side == Side.ONE


@pytest.mark.parametrize("body,kind", [
    ("alphabet = a b\nkind = full", "full"),
    ("alphabet = a b\nkind = forbidden\nforbidden = bb", "forbidden"),
    ("alphabet = a b\nkind = substitution\nsubstitution = a:ab, b:a", "substitution"),
    ("alphabet = a b\nkind = points\npoints = ab, a", "points"),
    ("preset = upper-triangular\nside = two", "matrix"),
])
def test_parse_kinds(body, kind):
    cfg = parse_config("[system]\n" + body + "\n")
    assert cfg.kind == kind


def test_defaults():
    cfg = preset_config("golden-mean")
    assert (cfg.resolution, cfg.radius, cfg.basis, cfg.coverage_floor, cfg.depth, cfg.seed) == \
        ((3, 3), 2, (2, 4), 0.9, 12, 0)


@pytest.mark.parametrize("text", [
    "",
    "[system]\nkind = full\n",
    "[system]\nalphabet = a b\nkind = sofic\n",
    "[system]\nalphabet = a b\nkind = matrix\nmatrix = 1 1; 0 0\n",
    "[system]\nalphabet = a b\nkind = matrix\nmatrix = 1 1\n",
    "[system]\nalphabet = a a\nkind = full\n",
    "[system]\nalphabet = a b\nkind = substitution\nsubstitution = a:ab\n",
    "[system]\npreset = nope\n",
    "[system]\npreset = full\nside = three\n",
    "[system]\npreset = full\n[bounds]\nresolution = 1\n",
    "[system]\npreset = full\n[bounds]\ncoverage_floor = 1.5\n",
    "[system]\npreset = full\n[bounds]\nradius = -1\n",
    "[system\n",
])
def test_bad_configs(text):
    with pytest.raises(InputError):
        parse_config(text)


def test_exit_code_rules():
    def rep(v):
        r = Report("x")
        r.verdict = v
        return r

    assert exit_code([rep(PASS), rep(PASS)]) == 0
    assert exit_code([rep(PASS), rep(INCONCLUSIVE)]) == 2
    assert exit_code([rep(INCONCLUSIVE), rep(FAIL)]) == 1


def test_check_pass_exit_zero(tmp_path):
    code, out = call("check", "--config", write(tmp_path, GM_INI), "--suite", "axioms,ck,stone,modsat")
    assert code == 0
    assert out.splitlines() == ["axioms: pass", "ck: pass", "stone: pass", "modsat: pass"]


def test_crossed_on_full_two_sided():
    assert call("check", "--preset", "full", "--side", "two", "--suite", "crossed")[0] == 0


def test_special_fail_exit_one():
    code, out = call("special", "--preset", "golden-mean")
    assert code == 1 and "property_star: fail" in out


def test_inconclusive_exit_two():
    code, out = call("special", "--preset", "fibonacci", "--depth", "2")
    assert code == 2 and "property_starstar: inconclusive" in out


@pytest.mark.parametrize("argv", [
    ("check", "--preset", "fibonacci", "--suite", "ck"),
    ("check", "--preset", "golden-mean", "--suite", "nonsense"),
    ("describe", "--config", "/nonexistent/x.ini"),
    ("describe",),
    ("units", "--preset", "full"),
])
def test_input_error_exit_three(argv):
    assert call(*argv)[0] == 3


def test_json_schema(tmp_path):
    path = tmp_path / "r.json"
    code, _ = call("check", "--preset", "golden-mean", "--suite", "definition", "--json", str(path), "--seed", "3")
    data = json.loads(path.read_text())
    assert code == 0 and len(data) == 1
    rep = data[0]
    assert set(rep) >= {"suite", "verdict", "params", "counterexamples", "coverage", "timings_ms"}
    assert rep["suite"] == "definition" and rep["verdict"] == "pass" and rep["params"]["seed"] == 3
    assert all(0.9 <= v <= 1.0 for v in rep["coverage"].values())


def test_json_stdout_deterministic():
    def strip(text):
        data = json.loads(text[text.index("["):])
        for r in data:
            r.pop("timings_ms")
        return data

    a = strip(call("check", "--preset", "golden-mean", "--suite", "modsat", "--json", "-")[1])
    b = strip(call("check", "--preset", "golden-mean", "--suite", "modsat", "--json", "-")[1])
    assert a == b


def test_describe_counts():
    _, out = call("describe", "--preset", "golden-mean", "--resolution", "1,1", "--json", "-")
    rep = json.loads(out[out.index("["):])[0]
    assert rep["details"]["factor_counts"][:4] == [2, 3, 5, 8]
    assert rep["details"]["atom_counts"]["1,1"] == 3
    _, out = call("describe", "--preset", "fibonacci", "--resolution", "1,1", "--json", "-")
    rep = json.loads(out[out.index("["):])[0]
    assert rep["details"]["factor_counts"] == [2, 3, 4, 5, 6, 7]


def test_ideals_dot(tmp_path):
    dot = tmp_path / "l.dot"
    code, out = call("ideals", "--preset", "upper-triangular", "--dot", str(dot))
    assert code == 0 and out.strip() == "ideal_lattice: pass"
    text = dot.read_text()
    assert text.startswith("digraph ideals") and text.count("->") == 2


def test_stone_dot(tmp_path):
    dot = tmp_path / "s.dot"
    call("check", "--preset", "golden-mean", "--suite", "stone", "--resolution", "1,1", "--dot", str(dot))
    assert dot.read_text().count("[label=\"(") == 3


def test_fibonacci_commands():
    assert call("psi", "--preset", "fibonacci")[0] == 0
    assert call("units", "--preset", "fibonacci")[0] == 0
    code, out = call("special", "--preset", "fibonacci", "--json", "-")
    ledger = json.loads(out[out.index("["):])[0]["details"]["ledger"]
    assert code == 0 and ledger["n_X"] == 1


def test_suite_names():
    assert set(SUITES) >= {"axioms", "definition", "appendix", "ck", "crossed", "lambda-phi", "stone", "modsat"}


def test_console_script():
    done = subprocess.run([sys.executable, "-m", "partialshift.cli", "--help"], capture_output=True, text=True)
    assert done.returncode == 0 and "--coverage-floor" in done.stdout
