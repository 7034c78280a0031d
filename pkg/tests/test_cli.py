"""Command-line interface: artifacts, round trips, exit codes."""

import json
import math

import numpy as np
import pytest

from rhomean.cli import main
from rhomean.jsonio import (
    complex_matrix_from_json,
    complex_matrix_to_json,
    cycles_to_perm,
    estimate_from_json,
    estimate_to_json,
    load_json,
    oracle_result_from_json,
    oracle_result_to_json,
    perm_to_cycles,
    rational_matrix_from_json,
)
from rhomean.montecarlo import estimate_mean
from rhomean.measures import HaarDirichletMeasure
from rhomean.oracle import haar_mean


def test_cycle_notation_round_trip():
    assert perm_to_cycles((0, 1, 2)) == "()"
    assert perm_to_cycles((1, 0, 2)) == "(12)"
    assert perm_to_cycles((1, 0, 3, 2)) == "(12)(34)"
    for m in (2, 3, 4):
        from itertools import permutations

        for p in permutations(range(m)):
            assert cycles_to_perm(perm_to_cycles(p), m) == p


def test_matrix_json_round_trips():
    mat = np.array([[1 + 2j, 0], [0.5j, -1]])
    assert np.array_equal(complex_matrix_from_json(complex_matrix_to_json(mat)), mat)
    result = haar_mean(2, 2, 0)
    back = oracle_result_from_json(oracle_result_to_json(result))
    assert np.all(back.mean == result.mean)
    assert back.coefficients == result.coefficients
    assert back.scenario == result.scenario


def test_estimate_json_round_trip():
    est = estimate_mean(HaarDirichletMeasure(n=2), 2, 1_000, seed=3)
    back = estimate_from_json(estimate_to_json(est))
    assert np.array_equal(back.mean, est.mean)
    assert np.array_equal(back.stderr, est.stderr)
    assert back.measure == est.measure
    assert back.n_samples == est.n_samples


def test_oracle_command_outputs_published_entries(tmp_path):
    out = tmp_path / "oracle.json"
    assert main(["oracle", "--n", "2", "--m", "2", "--q", "0", "--out", str(out)]) == 0
    payload = load_json(out)
    entries = set(payload["matrix"]["entries"])
    assert entries == {"5/18", "2/9", "1/18", "0"}
    assert payload["coefficients"]["(12)"] == "1/18"
    mat = rational_matrix_from_json(payload["matrix"])
    assert np.all(mat == haar_mean(2, 2, 0).mean)


def test_oracle_command_composite(tmp_path):
    out = tmp_path / "comp.json"
    assert main(["oracle", "--n", "2x3", "--m", "2", "--out", str(out)]) == 0
    payload = load_json(out)
    assert payload["factors"] == [2, 3]
    assert ["1/72", 3] in payload["spectrum"]


def test_ks_command(capsys, tmp_path):
    out = tmp_path / "ks.json"
    assert main(["ks", "--m", "4", "--u", "-2", "--out", str(out)]) == 0
    shown = capsys.readouterr().out
    assert "7/66" in shown and "1/22" in shown and "1/33" in shown
    rows = load_json(out)["rows"]
    assert [r["multiplicity"] for r in rows] == [5, 9, 2]


def test_mean_command_is_byte_reproducible(tmp_path):
    args = [
        "mean", "--measure", '{"type":"zhsl","n":2,"q":[0,0]}',
        "--m", "2", "--samples", "5000", "--seed", "11", "--workers", "2",
    ]
    out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
    assert main(args + ["--out", str(out1)]) == 0
    assert main(args + ["--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_selection_rule_and_subst_v_commands(tmp_path):
    rational_out = tmp_path / "limit.json"
    assert main(["selection-rule", "--fixture", "n3m2", "--out", str(rational_out)]) == 0
    mat = rational_matrix_from_json(load_json(rational_out))
    assert np.all(mat == haar_mean(3, 2, 0).mean)

    numeric_out = tmp_path / "atpi.json"
    assert main(["subst-v", "--fixture", "n3m2", "--v", str(math.pi), "--out", str(numeric_out)]) == 0
    mat = complex_matrix_from_json(load_json(numeric_out))
    assert abs(mat[0, 2] - 1 / (864 * math.pi)) < 1e-15


def test_spectrum_command(tmp_path):
    oracle_out = tmp_path / "oracle.json"
    main(["oracle", "--n", "3", "--m", "2", "--out", str(oracle_out)])
    # feed the rational matrix artifact back through the spectrum command
    mat_file = tmp_path / "mat.json"
    mat_file.write_text(json.dumps(load_json(oracle_out)["matrix"]))
    spec_out = tmp_path / "spec.json"
    assert main(["spectrum", "--in", str(mat_file), "--tol", "1e-9", "--out", str(spec_out)]) == 0
    clusters = load_json(spec_out)["clusters"]
    assert [(round(c["value"], 12), c["multiplicity"]) for c in clusters] == [
        (round(1 / 12, 12), 3),
        (0.125, 6),
    ]


def test_sample_command(tmp_path):
    out = tmp_path / "rho.json"
    assert main(["sample", "--measure", '{"type":"bloch","u":-2}', "--seed", "5", "--out", str(out)]) == 0
    rho = complex_matrix_from_json(load_json(out))
    assert abs(rho.trace() - 1) < 1e-12


def test_measure_argument_accepts_file_path(tmp_path):
    measure_file = tmp_path / "measure.json"
    measure_file.write_text('{"type":"zhsl","n":2,"q":[0,0]}')
    out = tmp_path / "rho.json"
    assert main(["sample", "--measure", str(measure_file), "--out", str(out)]) == 0
    assert complex_matrix_from_json(load_json(out)).shape == (2, 2)


def test_verify_command(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["verify", "--case", "n2m2.exact", "--case", "monotone", "--out", str(out)]) == 0
    assert "PASS" in capsys.readouterr().out
    payload = load_json(out)
    assert {r["case"] for r in payload["reports"]} == {"n2m2.exact", "monotone"}
    assert all(r["status"] == "PASS" for r in payload["reports"])


def test_spectrum_command_accepts_symbolic_matrix(tmp_path):
    from rhomean.fixtures import get_fixture
    from rhomean.jsonio import symbolic_matrix_to_json

    mat_file = tmp_path / "sym.json"
    mat_file.write_text(json.dumps(symbolic_matrix_to_json(get_fixture("n3m2").matrix)))
    out = tmp_path / "spec.json"
    assert main(["spectrum", "--in", str(mat_file), "--out", str(out)]) == 0
    clusters = load_json(out)["clusters"]
    assert sorted(c["multiplicity"] for c in clusters) == [1, 1, 1, 1, 2, 3]


def test_usage_and_failure_exit_codes(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["oracle", "--m", "2"])  # missing --n
    assert exc.value.code == 2
    assert main(["oracle", "--n", "2", "--m", "2", "--q", "1"]) == 1  # q >= 1
    assert main(["subst-v", "--fixture", "n3m2", "--v", "0"]) == 1
    assert main(["verify"]) == 2
    capsys.readouterr()
