import json
import math
import os
import pathlib
import subprocess

import numpy as np
import pytest

import fho

ROOT = pathlib.Path(__file__).resolve().parents[2]
SCHEMAS = ROOT / "schemas"


def load_schema(name):
    return json.loads((SCHEMAS / name).read_text())


def test_propagator_group_law():
    p = fho.OscillatorParams(1.5, 2.0)
    lhs = fho.propagator(p, 0.7)
    rhs = fho.propagator(p, 0.3) @ fho.propagator(p, 0.4)
    assert np.max(np.abs(lhs - rhs)) < 1e-12
    assert abs(np.linalg.det(lhs) - 1.0) < 1e-12


def test_evolve_matches_constant_force_ellipse():
    p = fho.OscillatorParams(1.0, 2 * math.pi)
    z = fho.nonhomogeneous(p, fho.ForcingSpec.constant(1.0), 0.25)
    assert z.x == pytest.approx(1 / (4 * math.pi**2), abs=1e-12)
    assert z.p == pytest.approx(1 / (2 * math.pi), abs=1e-12)


def test_frame_and_survival():
    p = fho.OscillatorParams(1.0, 1.0)
    frame = fho.CanonicalFrame.build(p, fho.ForcingSpec.sinusoid(0.5, 1.3), 5.0)
    d = fho.DisplacementParams.from_frame(frame, 3.0)
    assert fho.ground_state_survival(frame, 3.0) == pytest.approx(math.exp(-d.lam), rel=1e-14)
    assert fho.transition_probability(0, 0, d) == pytest.approx(math.exp(-d.lam), rel=1e-10)


def test_unit_displacement_ground_survival():
    d = fho.DisplacementParams(math.sqrt(0.5), math.sqrt(0.5))
    assert fho.transition_probability(0, 0, d) == pytest.approx(math.exp(-0.5), rel=1e-12)


def test_probability_row_sums_to_one():
    row = fho.probability_row(2, fho.DisplacementParams(0.8, -0.4))
    assert sum(row.probabilities) == pytest.approx(1.0, abs=1e-10)
    import jsonschema

    jsonschema.validate(json.loads(row.to_json()), load_schema("transition_row.schema.json"))


def test_wavefunction_roundtrip_and_norm():
    p = fho.OscillatorParams(1.0, 1.0)
    grid = fho.GridSpec(-10.0, 10.0, 256, 1e-3)
    psi = fho.eigenstate_wave(p, grid, 1)
    assert psi.norm() == pytest.approx(1.0, abs=1e-10)
    values = psi.values
    assert values.shape == (256,)
    again = fho.WaveFunction(grid, values)
    assert fho.phase_aligned_distance(psi, again) < 1e-14


def test_domain_errors_are_translated():
    with pytest.raises(ValueError):
        fho.propagator(fho.OscillatorParams(-1.0, 1.0), 1.0)
    with pytest.raises(ValueError):
        fho.GridSpec(-1.0, 1.0, 100, 1e-3)


def test_scenario_defaults_validate_against_schema():
    import jsonschema

    scenario = fho.parse_scenario({})
    jsonschema.validate(scenario, load_schema("scenario.schema.json"))
    for path in sorted((ROOT / "scenarios").glob("*.json")):
        jsonschema.validate(json.loads(path.read_text()), load_schema("scenario.schema.json"))


def test_verify_report_schema():
    import jsonschema

    report = fho.verify({}, suite="classical")
    jsonschema.validate(report, load_schema("verify_report.schema.json"))
    assert report["passed"]
    assert {c["suite"] for c in report["checks"]} == {"classical"}


def test_run_command_writes_outputs(tmp_path):
    code, _ = fho.run("survival", {"time": {"t_max": 2.0, "samples": 5}}, tmp_path)
    assert code == 0
    lines = (tmp_path / "survival.csv").read_text().splitlines()
    assert lines[0] == "t,x_nh,xdot_nh,lambda,survival"
    assert len(lines) == 6


def test_run_command_config_error(tmp_path):
    with pytest.raises(ValueError):
        fho.run("classical", {"params": {"mass": -1.0}}, tmp_path)


@pytest.mark.skipif(not os.environ.get("FHO_CLI"), reason="CLI path not provided")
def test_cli_exit_codes(tmp_path):
    cli = os.environ["FHO_CLI"]
    bad = tmp_path / "bad.json"
    bad.write_text('{"params": {"omega": 0.0, "mass": 0.0}}')
    assert subprocess.run([cli, "classical", "--scenario", str(bad), "--out", str(tmp_path)]).returncode == 2
    ok = subprocess.run([cli, "verify", "--suite", "classical", "--out", str(tmp_path / "v")])
    assert ok.returncode == 0
