import io
import json
import subprocess
import sys

import pytest

from killing_lie import cli


def call(*argv, env_seed=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def payload(*argv):
    code, out, err = call(*argv)
    assert code == 0, err
    return json.loads(out)


def test_classify_d5():
    p = payload("classify", "--algebra", "D5", "--z", "1/2,1/2,1/2,1/2,1/2")
    assert (p["case"], p["n"], p["factors"], p["center_dim"]) == (2, 5, ["A4"], 1)


def test_classify_e7_by_noncompact_root():
    assert payload("classify", "--algebra", "E7", "--noncompact", "7")["case"] == "excluded-e7"


def test_spectrum_a2():
    p = payload("spectrum", "--algebra", "A2", "--z", "1,0,-1")
    assert p["levels"] == [{"lambda": 1, "mult": 4}, {"lambda": 2, "mult": 2}]
    assert p["regular"] is True


def test_roots_orbit_decompose():
    assert payload("roots", "--algebra", "E6")["num_positive_roots"] == 36
    assert payload("orbit", "--algebra", "B2", "--z", "0,-3")["dominant"] == [[3, 1], [0, 1]]
    d = payload("decompose", "--algebra", "C3", "--noncompact", "3")
    assert d["coefficient"] == "1/2" and len(d["units"]) == 3


def test_json_vector_input():
    a = payload("spectrum", "--algebra", "A2", "--z", '[1, "0", [-1, 1]]')
    b = payload("spectrum", "--algebra", "A2", "--z", "1,0,-1")
    assert a == b


@pytest.mark.parametrize(
    "argv,flag",
    [
        (("spectrum", "--algebra", "A2", "--z", "1.0,0,-1"), "--z"),
        (("spectrum", "--algebra", "A2", "--z", "[1.0, 0, -1]"), "--z"),
        (("spectrum", "--algebra", "A2", "--z", "1e0,0,-1"), "--z"),
        (("spectrum", "--algebra", "A2", "--z", "1,0,0"), "--z"),
        (("spectrum", "--algebra", "A2", "--z", "1,0"), "--z"),
        (("spectrum", "--algebra", "A2", "--z", "1/0,0,-1"), "--z"),
        (("roots", "--algebra", "F4"), "--algebra"),
        (("classify", "--algebra", "B3", "--noncompact", "2"), "--noncompact"),
    ],
)
def test_parameter_errors_exit_2_and_name_the_flag(argv, flag):
    code, out, err = call(*argv)
    assert code == 2 and not out
    assert flag in err


def test_unknown_subcommand_and_missing_vector():
    assert call("plot")[0] == 2
    assert call("spectrum", "--algebra", "A2")[0] == 2
    assert call("spectrum", "--algebra", "A2", "--z", "1,0,-1", "--noncompact", "1")[0] == 2


def test_decompose_outside_types_c_d():
    code, _, err = call("decompose", "--algebra", "A2", "--z", "1,0,-1")
    assert code == 2 and err


def test_orbit_cap_is_a_resource_error():
    code, _, err = call("orbit", "--algebra", "B4", "--z", "4,3,2,1", "--cap", "10")
    assert code == 1 and err


@pytest.mark.parametrize(
    "argv",
    [
        ("classify", "--algebra", "C3", "--noncompact", "3"),
        ("spectrum", "--algebra", "E6", "--noncompact", "1"),
        ("verify-sphere", "--fixture", "example8", "--samples", "40"),
    ],
)
def test_output_is_deterministic_and_round_trips(argv):
    _, first, _ = call(*argv)
    _, second, _ = call(*argv)
    assert first == second
    assert json.dumps(json.loads(first), sort_keys=True) == first.strip()


def test_z_round_trip_through_payload():
    p = payload("classify", "--algebra", "A3", "--noncompact", "2")
    z = json.dumps(p["z"])
    again = payload("classify", "--algebra", "A3", "--z", z)
    assert again == p


@pytest.mark.parametrize("fixture", ["example2", "example4", "example8", "le8"])
def test_verify_sphere_fixtures_pass(fixture):
    p = payload("verify-sphere", "--fixture", fixture, "--samples", "100")
    assert p["pass"] and all(r["pass"] for r in p["reports"])


def test_seed_precedence(monkeypatch):
    monkeypatch.setenv("KILLING_LIE_SEED", "77")
    assert payload("verify-sphere", "--samples", "10")["seed"] == 77
    assert payload("verify-sphere", "--samples", "10", "--seed", "5")["seed"] == 5
    monkeypatch.setenv("KILLING_LIE_SEED", "seventy")
    code, _, err = call("verify-sphere", "--samples", "10")
    assert code == 2 and "KILLING_LIE_SEED" in err
    monkeypatch.delenv("KILLING_LIE_SEED")
    assert payload("verify-sphere", "--samples", "10")["seed"] == 20240917


def test_selftest_passes():
    p = payload("selftest", "--samples", "50")
    assert p["pass"] and len(p["checks"]) >= 12


def test_text_format():
    code, out, _ = call("--format", "text", "classify", "--algebra", "D5", "--noncompact", "5")
    assert code == 0
    assert "case: 2" in out and "center_dim: 1" in out


def test_module_entry_point():
    r = subprocess.run(
        [sys.executable, "-m", "killing_lie", "spectrum", "--algebra", "A2", "--z", "1,0,-1"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert r.returncode == 0
    assert json.loads(r.stdout)["regular"] is True
