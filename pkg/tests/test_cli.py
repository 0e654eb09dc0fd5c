"""Command-line dispatch: report shapes, formats, exit codes, determinism."""

import json
import subprocess
import sys

import pytest

from finiverse.cli import dispatch, main, render_json, render_text


def run_json(argv):
    report = dispatch(argv + ["--format", "json"])
    return report, json.loads(render_json(report).decode("utf-8"))


def test_point_count_ok():
    report = dispatch(["cosmo", "point-count"])
    assert report.status == "ok"
    assert report.exit_code == 0
    value, unit = report.outputs["point_count"]
    assert value == pytest.approx(3.2604512570325904e123, rel=1e-12)
    assert unit == "points"
    text = render_text(report)
    assert "point_count = 3.26045125703259e+123 [points]" in text
    assert "formula:" in text


def test_json_rendering_is_deterministic():
    a = render_json(dispatch(["cosmo", "lambda", "--format", "json"]))
    b = render_json(dispatch(["cosmo", "lambda", "--format", "json"]))
    assert a == b
    assert a.endswith(b"\n")


def test_json_roundtrip_matches_to_dict():
    report, doc = run_json(["regularize", "partial-sum", "--n", "55"])
    assert doc == report.to_dict()
    assert doc["outputs"]["value"]["value"] == 1540
    assert doc["exit_code"] == 0


def test_zeta_renders_exact_rational():
    _, doc = run_json(["regularize", "zeta", "--s", "1"])
    assert doc["outputs"]["value"]["value"] == {"num": -1, "den": 12}
    report = dispatch(["regularize", "zeta", "--s", "1"])
    assert "value = -1/12" in render_text(report)


def test_bernoulli_value():
    _, doc = run_json(["regularize", "bernoulli", "--n", "12"])
    assert doc["outputs"]["value"]["value"] == {"num": -691, "den": 2730}


def test_degenerate_none_path():
    report = dispatch(["geometry", "degenerate", "--q", "3"])
    assert report.status == "none"
    assert report.exit_code == 0
    assert "result: none" in render_text(report)
    _, doc = run_json(["geometry", "degenerate", "--q", "3"])
    assert doc["status"] == "none"
    assert doc["result"] is None


def test_degenerate_found_for_q5():
    report = dispatch(["geometry", "degenerate", "--q", "5"])
    assert report.status == "ok"
    assert report.outputs["squared_distance"][0] == "0"


def test_gaussian_failure_carries_witness():
    report = dispatch(["field", "gaussian", "--p", "5"])
    assert report.status == "error"
    assert report.exit_code == 1
    assert report.error == "NotAField"
    _, doc = run_json(["field", "gaussian", "--p", "5"])
    assert doc["error"] == "NotAField"
    assert doc["witness"] == [[2, 1], [3, 1]]
    assert doc["exit_code"] == 1


def test_curvature_error_exit_code():
    report = dispatch(["cosmo", "rate", "--kappa", "1"])
    assert report.status == "error"
    assert report.exit_code == 1
    assert report.error == "CurvatureUnsupported"


def test_usage_errors_exit_two():
    for argv in (
        ["frobnicate"],
        ["field", "table"],  # missing --p
        ["cosmo", "point-count", "--bogus"],
        [],
    ):
        report = dispatch(argv)
        assert report.status == "error"
        assert report.exit_code == 2
        assert report.error == "Usage"


def test_field_table_shows_quartic_structure():
    _, doc = run_json(["field", "table", "--p", "2", "--k", "2"])
    mul = doc["outputs"]["mul_table"]["value"]
    header = mul[0]
    col = header.index("a")
    row = next(r for r in mul[1:] if r[0] == "a")
    assert row[col] == "a+1"  # the generator squares to a+1 in the quartic field
    text = render_text(dispatch(["field", "table", "--p", "2", "--k", "2"]))
    assert "mul_table:" in text and "a+1" in text


def test_field_table_size_cap():
    report = dispatch(["field", "table", "--p", "101"])
    assert report.exit_code == 1
    assert report.error == "SizeLimit"


def test_field_axioms_ring_diagnostic():
    _, doc = run_json(["field", "axioms", "--ring", "6"])
    assert doc["status"] == "ok"
    assert doc["outputs"]["all_pass"]["value"] is False
    assert "FAIL" in doc["outputs"]["inverses"]["value"]
    _, doc = run_json(["field", "axioms", "--p", "7"])
    assert doc["outputs"]["all_pass"]["value"] is True


def test_field_inverse():
    _, doc = run_json(["field", "inverse", "--p", "7", "--element", "3"])
    assert doc["outputs"]["inverse"]["value"] == "5"
    _, doc = run_json(["field", "inverse", "--p", "2", "--k", "2", "--element", "0:1"])
    assert doc["outputs"]["inverse"]["value"] == "a+1"


def test_ordinary_line_paths():
    report = dispatch(["geometry", "ordinary-line", "--points", "0,0;1,1;2,2;3,3"])
    assert report.status == "none"
    report = dispatch(
        ["geometry", "ordinary-line", "--points", "0,0;1,0;2,0;0,1;1,1;2,1;0,2;1,2;2,2"]
    )
    assert report.status == "ok"
    assert len(report.outputs["pair"][0]) == 2


def test_hilbert_norm_isotropic():
    _, doc = run_json(["hilbert", "norm", "--p", "2", "--k", "2", "--vector", "1:0,1:0"])
    assert doc["outputs"]["norm_squared"]["value"] == "0"
    assert doc["outputs"]["isotropic"]["value"] is True


def test_hilbert_inner_and_cardinality():
    _, doc = run_json(
        ["hilbert", "inner", "--p", "3", "--gaussian", "--u", "1:0,0:1", "--v", "1:0,0:1"]
    )
    assert doc["outputs"]["inner_product"]["value"] == "2"
    _, doc = run_json(["hilbert", "cardinality", "--p", "3", "--k", "2", "--dim", "2"])
    assert doc["outputs"]["cardinality"]["value"] == 81


def test_linearity_warning_reported_not_fatal():
    report = dispatch(["cosmo", "diameter-at", "--dt", "1e17"])
    assert report.exit_code == 0
    assert report.warnings and "linear" in report.warnings[0]
    _, doc = run_json(["cosmo", "diameter-at", "--dt", "1e17"])
    assert doc["warnings"]
    quiet = dispatch(["cosmo", "diameter-at", "--dt", "1e15"])
    assert not quiet.warnings


def test_cosmo_evolve_vacuum():
    _, doc = run_json(
        [
            "cosmo", "evolve", "--eos", "vacuum",
            "--rho0", "6.0083103026895395e-27",
            "--t-end", "5.455840416463666e+17",
            "--step", "2.727920208231833e+14",
        ]
    )
    assert doc["status"] == "ok"
    a_end = float(doc["outputs"]["a_end"]["value"])
    assert a_end == pytest.approx(2.718281828, rel=1e-6)
    assert float(doc["outputs"]["halving_rel_diff"]["value"]) <= 1e-6


def test_config_file_and_flag_precedence(tmp_path):
    cfg = tmp_path / "params.cfg"
    cfg.write_text("rho_vac = 1.0e-9\nH0 = 2.0e-18\n", encoding="utf-8")
    report = dispatch(["cosmo", "point-count", "--config", str(cfg)])
    assert report.inputs["rho_vac"] == 1.0e-9
    report = dispatch(
        ["cosmo", "point-count", "--config", str(cfg), "--rho-vac", "2.0e-9"]
    )
    assert report.inputs["rho_vac"] == 2.0e-9  # flag beats config
    assert report.inputs["H0"] == 2.0e-18  # config beats default
    bad = dispatch(["cosmo", "point-count", "--config", str(tmp_path / "nope.cfg")])
    assert bad.status == "error"
    assert bad.exit_code == 1
    assert bad.error == "InvalidInput"


def test_growth_outputs():
    _, doc = run_json(["cosmo", "growth", "--dt-gyr", "6"])
    assert float(doc["outputs"]["factor"]["value"]) == pytest.approx(5.252307248673101, rel=1e-12)
    assert float(doc["outputs"]["exponent_per_gyr"]["value"]) == pytest.approx(
        0.276444576, rel=1e-12
    )


def test_main_exit_codes_and_streams(capsys):
    assert main(["regularize", "zeta", "--s", "0", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["outputs"]["value"]["value"] == {"num": -1, "den": 2}

    assert main(["field", "gaussian", "--p", "13"]) == 1
    out = capsys.readouterr().out
    assert "error: NotAField" in out and "witness:" in out

    assert main(["no-such-command"]) == 2
    captured = capsys.readouterr()
    assert "usage error:" in captured.err


def test_module_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "finiverse", "regularize", "zeta", "--s", "1", "--format", "json"],
        capture_output=True,
        timeout=60,
    )
    assert proc.returncode == 0
    doc = json.loads(proc.stdout.decode("utf-8"))
    assert doc["outputs"]["value"]["value"] == {"num": -1, "den": 12}


def test_planck_density_command():
    _, doc = run_json(["cosmo", "planck-density"])
    assert float(doc["outputs"]["planck_density"]["value"]) == pytest.approx(
        1.843391011650114e112, rel=1e-12
    )
    assert float(doc["outputs"]["min_diameter_at_planck_density"]["value"]) == pytest.approx(
        1.8294288892041766e-55, rel=1e-12
    )
