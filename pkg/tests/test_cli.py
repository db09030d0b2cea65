"""End-to-end tests for the command line interface.

Every subcommand is exercised in-process through ``cli.main`` so we can
freeze exact stdout, check exit codes, and inject a rigged random source
for the integration-failure path.
"""

import io
import json
from contextlib import redirect_stderr, redirect_stdout

import pytest

from ellgenus import cli
from ellgenus.cli import render_payload

QUINTIC_GENUS_TEXT = (
    "-100*y - 100*y^2"
    " + (100*y^-1 - 100*y - 100*y^2 + 100*y^4)*q"
    " + (100*y^-2 + 100*y^-1 - 200*y - 200*y^2 + 100*y^4 + 100*y^5)*q^2"
    " + O(q^3)"
)

D4_INFO_TEXT = """\
    O 4
    |
X---O---O
1   2   3
D4 with node 1 marked
dimension: 6
fixed points: 8"""


def run(argv, rng=None):
    """Invoke the CLI in-process; return (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = cli.main(argv, rng=rng)
    return code, out.getvalue(), err.getvalue()


# ---------------------------------------------------------------------------
# text output of each subcommand


def test_genus_quintic_text():
    code, out, _ = run(
        ["genus", "--space", "A4[1]", "--bundle", "5,0,0,0", "--order", "2"])
    assert code == 0
    assert out == QUINTIC_GENUS_TEXT + "\n"


def test_chi_y_k3_text():
    code, out, _ = run(["chi-y", "--space", "A3[1]", "--bundle", "4,0,0"])
    assert code == 0
    assert out == "2 + 20*y + 2*y^2\n"


def test_chern_gr35_text():
    code, out, _ = run(
        ["chern", "--space", "A4[3]", "--degrees", "1,1,1,1,1,1"])
    assert code == 0
    assert out == "78125\n"


def test_chern_degree_mismatch_is_zero():
    code, out, _ = run(["chern", "--space", "A4[3]", "--degrees", "2,2"])
    assert code == 0
    assert out == "0\n"


def test_info_d4_text():
    code, out, _ = run(["info", "--space", "D4[1]"])
    assert code == 0
    assert out == D4_INFO_TEXT + "\n"


def test_basis_half_integral_text():
    code, out, _ = run(
        ["basis", "--weight", "0", "--double-index", "3", "--prec", "1"])
    assert code == 0
    assert out == "1 + y + (-y^-2 + 1 + y - y^3)*q + O(q^2)\n"


def test_basis_integral_text_and_default_prec():
    code, out, _ = run(["basis", "--weight", "0", "--double-index", "2"])
    assert code == 0
    lines = out.rstrip("\n").split("\n")
    assert len(lines) == 1
    assert lines[0].startswith("y^-1 + 10 + y + ")
    assert lines[0].endswith("O(q^8)")  # default window keeps q^0..q^7


def test_basis_weight_zero_index_three_has_three_elements():
    code, out, _ = run(
        ["basis", "--weight", "0", "--double-index", "6", "--prec", "0"])
    assert code == 0
    assert out.rstrip("\n").split("\n") == [
        "y^-3 + 30*y^-2 + 303*y^-1 + 1060 + 303*y + 30*y^2 + y^3 + O(q^1)",
        "y^-3 + 6*y^-2 - 33*y^-1 + 52 - 33*y + 6*y^2 + y^3 + O(q^1)",
        "y^-3 - 6*y^-2 + 15*y^-1 - 20 + 15*y - 6*y^2 + y^3 + O(q^1)",
    ]


# ---------------------------------------------------------------------------
# JSON output: schema and byte-exact agreement with the text renderer

JSON_JOBS = [
    ["genus", "--space", "A1[1]", "--order", "1"],
    ["chi-y", "--space", "A3[1]", "--bundle", "4,0,0"],
    ["chern", "--space", "A4[3]", "--degrees", "1,1,1,1,1,1"],
    ["info", "--space", "D4[1]"],
    ["basis", "--weight", "0", "--double-index", "3", "--prec", "1"],
]


@pytest.mark.parametrize("argv", JSON_JOBS, ids=lambda a: a[0])
def test_json_matches_text_rendering(argv):
    code_j, out_j, _ = run(argv + ["--format", "json"])
    code_t, out_t, _ = run(argv)
    assert code_j == 0 and code_t == 0
    payload = json.loads(out_j)
    assert render_payload(payload) == out_t.rstrip("\n")


def test_genus_json_schema():
    code, out, _ = run(
        ["genus", "--space", "A1[1]", "--order", "1", "--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert set(payload) == {"dimension", "y_half_power", "terms", "order"}
    assert payload["dimension"] == 1
    assert payload["y_half_power"] == 1
    assert payload["order"] == 1
    assert [t["q"] for t in payload["terms"]] == [0, 1]
    assert all(set(t) == {"q", "coeffs"} for t in payload["terms"])
    assert payload["terms"][0]["coeffs"] == {"0": "1", "1": "1"}
    assert payload["terms"][1]["coeffs"] == {
        "-1": "-3", "0": "3", "1": "3", "2": "-3"}


def test_chern_json_value_is_string():
    code, out, _ = run(["chern", "--space", "A4[3]", "--degrees",
                        "1,1,1,1,1,1", "--format", "json"])
    assert code == 0
    assert json.loads(out) == {"value": "78125"}


# ---------------------------------------------------------------------------
# exit codes

MALFORMED = [
    ["info", "--space", "Z4[1]"],          # unknown series letter
    ["info", "--space", "E9[1]"],          # rank outside the classification
    ["info", "--space", "A4[9]"],          # crossed node out of range
    ["info", "--space", "A4[0]"],          # nodes are numbered from 1
    ["info", "--space", "A4[1,1]"],        # duplicate crossed node
    ["info", "--space", "A4"],             # missing bracket list
    ["genus", "--space", "A4[1]", "--order", "-1"],
    ["genus", "--space", "A4[1]", "--bundle", "1,x,0,0"],
    ["chern", "--space", "A4[3]", "--degrees", "1,1,1,1,1,x"],
    ["basis", "--weight", "0"],            # argparse: missing --double-index
]


@pytest.mark.parametrize("argv", MALFORMED, ids=" ".join)
def test_malformed_requests_exit_2(argv):
    code, out, _ = run(argv)
    assert code == 2
    assert out == ""


INVALID = [
    ["basis", "--weight", "1", "--double-index", "2"],   # odd weight
    ["basis", "--weight", "0", "--double-index", "-2"],  # negative index
    ["chern", "--space", "A4[3]", "--degrees", "7"],     # degree > dim
    ["chern", "--space", "A4[3]", "--degrees", "0,6"],   # degree < 1
    ["chi-y", "--space", "A3[1]", "--bundle", "2,2,2,2"],  # dim < 0
]


@pytest.mark.parametrize("argv", INVALID, ids=" ".join)
def test_mathematically_invalid_requests_exit_3(argv):
    code, out, err = run(argv)
    assert code == 3
    assert out == ""
    assert err != ""


def test_degenerate_sampling_exits_4(zero_rng):
    argv = ["chern", "--space", "A4[3]", "--degrees", "1,1,1,1,1,1",
            "--mode", "float"]
    code, out, err = run(argv, rng=zero_rng)
    assert code == 4
    assert out == ""
    assert "integration failed" in err


def test_float_mode_with_seed_is_deterministic():
    argv = ["chern", "--space", "A4[3]", "--degrees", "1,1,1,1,1,1",
            "--mode", "float", "--seed", "7"]
    first = run(argv)
    second = run(argv)
    assert first == second
    assert first[0] == 0
    assert first[1] == "78125\n"


# ---------------------------------------------------------------------------
# argument parsing round-trips


def test_jobspec_round_trips_through_argv():
    argv = ["genus", "--space", "g2[2,1]", "--order", "3",
            "--mode", "float", "--format", "json", "--seed", "11"]
    job = cli.parse_args(argv)
    assert job.space == "G2[1,2]"  # canonical case and node order
    assert cli.parse_args(job.to_argv()) == job


def test_parse_space_accepts_and_canonicalizes():
    assert cli.parse_space("A4[3]") == ("A", 4, (3,))
    assert cli.parse_space("d5[4,2]") == ("D", 5, (2, 4))


@pytest.mark.parametrize("text", ["", "A4", "A[1]", "4A[1]", "A4[]",
                                  "A4[1,]", "A4[1 2]", "H2[1]"])
def test_parse_space_rejects_bad_grammar(text):
    with pytest.raises(cli.SpecError):
        cli.parse_space(text)
