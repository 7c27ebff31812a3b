import json
import random
import subprocess
import sys

import pytest

from latvert.cli import main
from latvert.exact import IntMatrix, format_matrix, kernel_basis
from latvert.monomial import parse_ideal, parse_ideal_names


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def write_matrix(tmp_path, name, rows, cols=None):
    M = IntMatrix.from_rows(rows, cols=cols)
    p = tmp_path / name
    p.write_text(format_matrix(M))
    return str(p)


def test_vertex_ideal_inline(capsys):
    code, out, _ = run(capsys, "vertex-ideal", "--matrix", "[1 2 3]", "--method", "circuits")
    assert code == 0
    assert parse_ideal(out, 3) == parse_ideal_names("abc, a^2b, a^3c, b^3c^2", 3)
    code, out, _ = run(capsys, "vertex-ideal", "--matrix", "[1 2 3]", "--pretty")
    assert out.strip() == str(parse_ideal_names("abc, a^2b, a^3c, b^3c^2", 3))


def test_methods_agree(capsys):
    outs = {}
    for method in ["circuits", "intersection"]:
        code, out, _ = run(capsys, "vertex-ideal", "--matrix", "[3 4 5]", "--method", method, "--json")
        assert code == 0
        outs[method] = json.loads(out)
    assert outs["circuits"] == outs["intersection"]
    # the oracle only reports generators inside its box
    code, out, _ = run(capsys, "vertex-ideal", "--matrix", "[1 2 3]", "--method", "oracle", "--box", "4", "--json")
    assert code == 0
    assert parse_ideal(out) == parse_ideal_names("abc, a^2b, a^3c, b^3c^2", 3)
    code, out, _ = run(capsys, "vertex-ideal", "--matrix", "[1 2 3]", "--method", "oracle", "--box", "2", "--json")
    assert parse_ideal(out) == parse_ideal_names("abc, a^2b", 3)


def test_cone_count_facets(capsys):
    code, out, _ = run(capsys, "cone", "--matrix", "[15 247 248 345]", "--weight", "111,0,342,1", "--count-facets")
    assert code == 0 and out.strip() == "facets: 5"


def test_rank_zero_graver(tmp_path, capsys):
    path = write_matrix(tmp_path, "B.txt", [[] for _ in range(3)], cols=0)
    code, out, _ = run(capsys, "graver", "--lattice-basis", path, "--json")
    assert code == 0 and json.loads(out) == []


def test_exit_codes(capsys):
    assert run(capsys, "reproduce", "unknown-id")[0] == 1
    assert run(capsys, "vertex-ideal", "--matrix", "[1 2 x]")[0] == 1
    assert run(capsys, "vertex-ideal")[0] == 1
    assert run(capsys, "graver", "--matrix", "[15 247 248 345]", "--budget", "20")[0] == 2
    assert run(capsys, "initial", "--matrix", "[1 2 3]", "--weight", "1,2")[0] == 1
    assert run(capsys, "nonsense")[0] == 1


def test_reproduce_pass_and_fail(capsys):
    code, out, _ = run(capsys, "reproduce", "ex-345")
    assert code == 0 and "P_L strictly inside V_L" in out and "FAIL" not in out
    code, out, _ = run(capsys, "reproduce", "ex-123", "--json")
    assert code == 0 and all(c["pass"] for c in json.loads(out))


@pytest.mark.parametrize("prop", ["pl-subset-vl", "rad-equal", "top-equal", "codim2-embedded", "dimension-bounds"])
def test_checks_pass(capsys, prop):
    code, out, _ = run(capsys, "check", "--matrix", "[3 4 5]", "--property", prop, "--json")
    assert code == 0 and json.loads(out)["pass"]


def test_dim2_and_unimodular_checks(tmp_path, capsys):
    path = write_matrix(tmp_path, "B.txt", [[3, 1], [-2, 5]])
    assert run(capsys, "check", "--lattice-basis", path, "--property", "dim2-equal")[0] == 0
    assert run(capsys, "check", "--matrix", "[1 1 1]", "--property", "unimodular-equal")[0] == 0
    # [3 4 5] is not unimodular and P_L differs from V_L there
    assert run(capsys, "check", "--matrix", "[3 4 5]", "--property", "unimodular-equal")[0] == 1


COMMANDS = [
    ["graver"], ["vertex-ideal"], ["product-ideal"], ["radical"], ["radical", "--via", "matroid"],
    ["std-pairs"], ["irr-decomp"], ["assoc-primes"], ["top"], ["top", "--ideal", "product"],
    ["initial", "--weight", "5,3,2,1"], ["cone", "--weight", "5,3,2,1"], ["fan"],
]


@pytest.mark.parametrize("cmd", COMMANDS, ids=lambda c: " ".join(c))
def test_json_round_trip_and_byte_stability(capsys, cmd):
    argv = cmd + ["--matrix", "[2 3 4 5]", "--json"]
    code, first, _ = run(capsys, *argv)
    assert code == 0
    _, second, _ = run(capsys, *argv)
    assert first == second
    obj = json.loads(first)
    assert json.loads(json.dumps(obj, sort_keys=True)) == obj


@pytest.mark.parametrize("cmd", [c for c in COMMANDS if c[0] not in ("initial", "cone")], ids=lambda c: " ".join(c))
def test_output_independent_of_basis(tmp_path, capsys, cmd):
    K = kernel_basis(IntMatrix.from_rows([[2, 3, 4, 5]]))
    rng = random.Random(4)
    rows = [list(r) for r in K.entries]
    # apply random elementary column operations (a unimodular change of basis)
    for _ in range(6):
        i, j = rng.sample(range(K.cols), 2)
        k = rng.choice([-2, -1, 1, 2])
        for r in rows:
            r[i] += k * r[j]
    base = write_matrix(tmp_path, "K.txt", [list(r) for r in K.entries])
    other = write_matrix(tmp_path, "K2.txt", rows)
    _, a, _ = run(capsys, *cmd, "--lattice-basis", base, "--json")
    _, b, _ = run(capsys, *cmd, "--lattice-basis", other, "--json")
    _, c, _ = run(capsys, *cmd, "--matrix", "[2 3 4 5]", "--json")
    assert a == b == c


def test_hilbert_counts(capsys):
    code, out, _ = run(capsys, "hilbert-counts", "--matrix", "[1 2 3]", "--degrees", "0..8", "--json")
    assert code == 0
    counts = [c["count"] for c in json.loads(out)]
    assert counts[:3] == [1, 1, 2]


def test_console_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "latvert", "vertex-ideal", "--matrix", "[1 2 3]", "--pretty"],
        capture_output=True, text=True, check=False,
    )
    assert res.returncode == 0
    assert res.stdout.strip() == "<a*b*c, a^2*b, a^3*c, b^3*c^2>"
