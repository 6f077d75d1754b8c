import json

import pytest

import cayley


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ("CAYLEY_SEED", "CAYLEY_THREADS", "CAYLEY_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)


def run(capsys, *argv):
    code = cayley.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ============================================================================
# Golden invocations
# ============================================================================


def test_composition_check_reports_witness(capsys):
    argv = ["check", "--law", "composition", "--level", "4", "--samples", "1000", "--seed", "7", "--json"]
    code, first, _ = run(capsys, *argv)
    assert code == 1
    payload = json.loads(first)
    assert payload["law"] == "composition"
    assert payload["holds"] is False
    assert len(payload["witness"]) == 2
    assert payload["elapsed_ms"] is None

    _, second, _ = run(capsys, *argv)
    _, pooled, _ = run(capsys, *argv, "--threads", "4")
    assert first == second == pooled


def test_matrix_staircase_is_deterministic(capsys):
    argv = ["matrix", "--max-level", "4", "--samples", "500", "--seed", "1", "--json"]
    code, first, _ = run(capsys, *argv)
    assert code == 0
    rows = json.loads(first)["rows"]
    flags = [[row[name] for name in ("composition", "associative", "commutative", "trivial_conj")] for row in rows]
    assert flags == [
        [True, True, True, True],
        [True, True, True, False],
        [True, True, False, False],
        [True, False, False, False],
        [False, False, False, False],
    ]
    _, pooled, _ = run(capsys, *argv, "--threads", "2")
    assert pooled == first


def test_quaternion_table(capsys):
    code, out, _ = run(capsys, "table", "--level", "2", "--names")
    assert code == 0
    assert [line.split() for line in out.splitlines()] == [
        ["i", "j", "k"],
        ["i", "-1", "k", "-j"],
        ["j", "-k", "-1", "i"],
        ["k", "j", "-i", "-1"],
    ]


# ============================================================================
# Verbs
# ============================================================================


def test_eval_reports_inferred_level(capsys):
    code, out, err = run(capsys, "eval", "l*(I*J)")
    assert code == 0
    assert out == "e7\n"
    assert "level 3" in err

    _, out, _ = run(capsys, "eval", "(l*I)*J", "--pretty")
    assert out == "-K\n"


def test_eval_warns_about_chained_products(capsys):
    code, out, err = run(capsys, "eval", "l*I*J", "--level", "3")
    assert code == 0
    assert out == "-e7\n"
    assert "left to right" in err


def test_eval_json(capsys):
    code, out, err = run(capsys, "eval", "3/2*e1 + -1/2*e3", "--level", "2", "--json")
    assert code == 0
    assert err == ""
    assert json.loads(out) == {
        "expr": "3/2*e1 + -1/2*e3",
        "level": 2,
        "variant": "om",
        "kind": "element",
        "value": "3/2*e1 - 1/2*e3",
        "coefficients": ["0", "3/2", "0", "-1/2"],
    }


def test_eval_norms(capsys):
    _, out, _ = run(capsys, "eval", "norm((e3+e10)*(e6-e15))", "--level", "4")
    assert out == "0\n"
    _, out, _ = run(capsys, "eval", "norm(e3+e10)", "--level", "4")
    assert out == "2\n"


def test_eval_variant(capsys):
    _, out, _ = run(capsys, "eval", "(1 + k)*(1 - k)", "--level", "2", "--variant", "cm")
    assert out == "0\n"


def test_inverse(capsys):
    code, out, _ = run(capsys, "inverse", "e3 + e10", "--level", "4")
    assert code == 0
    assert out == "-1/2*e3 - 1/2*e10\n"
    _, out, _ = run(capsys, "inverse", "J - KL", "--pretty")
    assert out == "-1/2*J + 1/2*KL\n"


def test_verify_counterexamples(capsys):
    code, out, _ = run(capsys, "verify-counterexamples", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    assert "sedenion-zero-product" in {check["name"] for check in payload["checks"]}


def test_find_zero_divisors(capsys):
    code, out, _ = run(capsys, "find-zero-divisors", "--level", "4", "--max-terms", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == len(payload["certificates"]) > 0
    assert {"x": "e3 + e10", "y": "e6 - e15", "level": 4} in payload["certificates"]

    code, out, _ = run(capsys, "find-zero-divisors", "--level", "3")
    assert code == 0
    assert out.startswith("no zero divisors")


def test_cross(capsys):
    code, out, _ = run(capsys, "cross", "--dim", "3", "1,0,0", "0,1,0")
    assert code == 0
    assert out == "0,0,1\n"
    _, out, _ = run(capsys, "cross", "--dim", "3", "--", "-1,0,0", "0,1,0")
    assert out == "0,0,-1\n"


def test_cross_identities(capsys):
    code, out, _ = run(capsys, "cross", "--dim", "7", "--identities", "--samples", "50", "--json")
    assert code == 0
    payload = json.loads(out)
    jacobi = payload["identities"][-1]
    assert jacobi["identity"] == "jacobi"
    assert jacobi["holds"] is False and jacobi["expected"] is False
    assert len(jacobi["witness"]) == 3


def test_seed_defaults_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("CAYLEY_SEED", "7")
    _, out, _ = run(capsys, "check", "--law", "commutative", "--level", "1", "--samples", "10", "--json")
    assert json.loads(out)["seed"] == 7


# ============================================================================
# Errors
# ============================================================================


@pytest.mark.parametrize(
    "argv",
    [
        ["frobnicate"],
        ["check", "--law", "nope", "--level", "2"],
        ["table"],
        ["eval", "inv(0)"],
        ["eval", "i +"],
        ["eval", "e9", "--level", "2"],
        ["table", "--level", "7"],
        ["table", "--level", "5", "--names"],
        ["find-zero-divisors", "--level", "4", "--max-terms", "3"],
        ["cross", "--dim", "3", "1,0,0"],
        ["cross", "--dim", "3", "1,0,0,0", "0,1,0"],
        ["check", "--law", "composition", "--level", "2", "--threads", "0"],
    ],
)
def test_usage_and_arithmetic_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err


def test_error_message_format(capsys):
    _, _, err = run(capsys, "eval", "i +")
    assert err.startswith("error: ")
    assert "at byte 3" in err


def test_bad_environment(capsys, monkeypatch):
    monkeypatch.setenv("CAYLEY_THREADS", "many")
    code, _, err = run(capsys, "verify-counterexamples")
    assert code == 2
    assert "CAYLEY_THREADS" in err


def test_pretty_output_above_level_4_reparses(capsys):
    code, out, _ = run(capsys, "eval", "e1 + e16", "--level", "5", "--pretty")
    assert code == 0
    assert out == "e1 + e16\n"
    code, _, _ = run(capsys, "eval", out.strip(), "--level", "5")
    assert code == 0


def test_environment_seed_with_leading_zero(capsys, monkeypatch):
    monkeypatch.setenv("CAYLEY_SEED", "010")
    code, out, _ = run(capsys, "check", "--law", "commutative", "--level", "1", "--samples", "10", "--json")
    assert code == 0
    assert json.loads(out)["seed"] == 10
