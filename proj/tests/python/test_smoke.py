"""End-to-end smoke tests for the python bindings."""

import json
import math
import xml.etree.ElementTree as ET

import numpy as np
import pytest

import octantviz as ov


def linspace(a, b, n):
    return [a + (b - a) * i / (n - 1) for i in range(n)]


def test_pure_state_round_trip():
    s = ov.make_pure(1, 1, 1, math.pi / 2, 3 * math.pi / 4)
    assert s.alpha == pytest.approx(1 / math.sqrt(3))
    rho = ov.pure_to_density(s)
    m = rho.matrix
    assert m.shape == (3, 3)
    assert abs(m[0, 1]) == pytest.approx(1 / 3)
    assert ov.purity(rho) == pytest.approx(1.0)
    readout = ov.phase_readout(rho)
    assert readout.r01.phase == pytest.approx(math.pi / 2)
    assert readout.r02.phase == pytest.approx(3 * math.pi / 4)
    assert readout.r12.magnitude == pytest.approx(1.0)


def test_validation_raises_value_error():
    with pytest.raises(ValueError, match="positivity"):
        ov.validate_density(np.diag([1.5, -0.5, 0.0]).astype(complex))
    with pytest.raises(ValueError):
        ov.make_pure(0, 0, 0)


def test_gellmann_round_trip():
    rho = ov.pure_to_density(ov.make_pure(3, 4, 0, 0.3, 0))
    coeffs = ov.gellmann_decompose(rho)
    back = ov.gellmann_compose(coeffs)
    assert np.max(np.abs(back - rho.matrix)) < 1e-12


def test_decay_matches_the_exponential():
    schedule = ov.ControlSchedule()
    schedule.gamma10 = 1.0
    schedule.duration = 1.0
    initial = ov.validate_density(np.diag([0.0, 1.0, 0.0]).astype(complex))
    times = linspace(0.0, 1.0, 51)
    trajectory = ov.evolve(initial, schedule, times)
    assert trajectory.states[-1].population(1) == pytest.approx(math.exp(-1), abs=1e-8)

    oracle = ov.evolve_oracle(initial, schedule, times)
    gap = max(
        np.max(np.abs(a.matrix - b.matrix))
        for a, b in zip(trajectory.states, oracle.states)
    )
    assert gap < 1e-8


def test_preset_scene_render_pipeline():
    run = ov.build_preset(ov.PresetSpec("eit", "resonant"))
    assert run.schedule.duration == pytest.approx(40.0)
    times = sorted(set(linspace(0.0, run.schedule.duration, 101) + list(run.frame_times)))
    trajectory = ov.evolve(run.initial, run.schedule, times)
    scenes = ov.scene_series(trajectory, list(run.frame_times))
    assert len(scenes) == len(run.frame_times)

    scene = ov.overlay_dark_state(scenes[-1], 2.0, 2.0)
    svg = ov.render_scene(scene)
    ET.fromstring(svg)  # well-formed XML
    assert svg == ov.render_scene(scene)  # byte determinism

    payload = json.loads(scene.to_json())
    assert payload["schema"] == 1
    assert payload["overlays"][0]["label"] == "dark state"

    csv = trajectory.csv()
    assert csv.splitlines()[0] == "t,rho00,rho11,rho22,R01,R02,R12,phi1,phi2,phi12,purity"


def test_dark_state():
    d = ov.dark_state(2.0, 2.0)
    assert d.alpha == pytest.approx(1 / math.sqrt(2))
    assert d.beta == 0.0
    assert d.phi2 == pytest.approx(math.pi)
    with pytest.raises(ValueError):
        ov.dark_state(0.0, 1.0)


def test_cli_round_trip():
    code, out, err = ov.run_cli(["presets"])
    assert code == 0
    assert "eit: resonant, detuned" in out
    code, _, err = ov.run_cli(["simulate", "--preset", "nope"])
    assert code == 2
    assert "preset" in err
