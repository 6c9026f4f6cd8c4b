import copy

import numpy as np
import pytest

from src.harness.config import load_config
from src.harness.sweep import run_sweep, sweep_columns, write_sweep_csv
from src.storage.file_manager import FileManager


@pytest.fixture
def duration_sweep(otto_config, write_config):
    config = copy.deepcopy(otto_config)
    config["sweep"] = {"path": ["strokes[1].duration", "strokes[3].duration"], "scale": "log",
                       "from": 0.1, "to": 100.0, "count": 5}
    return load_config(write_config(config, "sweep.json"))


def test_sweep_columns(duration_sweep):
    assert sweep_columns(duration_sweep) == [
        "value", "W_net", "Q_hot", "Q_cold", "eta", "sigma_irr", "eta_carnot", "eta_clausius",
        "eta_generalized", "eta_info", "converged_after",
    ]


def test_otto_efficiency_is_constant_along_duration_sweep(duration_sweep):
    rows = run_sweep(duration_sweep)
    assert [row.value for row in rows] == pytest.approx(np.geomspace(0.1, 100.0, 5).tolist(), rel=1e-15)
    for row in rows:
        eta = float(row.cells[3])
        assert eta == pytest.approx(1.0 / 3.0, abs=1e-9)
        assert not row.violations
    works = [float(row.cells[0]) for row in rows]
    assert works == sorted(works)


def test_quasistatic_level_sweep_approaches_carnot(otto_config, write_config):
    config = copy.deepcopy(otto_config)
    for stroke in (1, 3):
        config["strokes"][stroke]["quasistatic"] = True
    config["sweep"] = {"path": ["strokes[0].protocol.end", "strokes[1].protocol.energy",
                                "strokes[2].protocol.start"],
                       "from": 2.1, "to": 3.999999, "count": 6}
    rows = run_sweep(load_config(write_config(config)))
    etas = [float(row.cells[3]) for row in rows]
    carnot = float(rows[-1].cells[5])
    assert etas == sorted(etas)
    assert carnot - etas[-1] < 2e-7
    assert float(rows[-1].cells[0]) < 1e-6


def test_sweep_output_is_byte_identical_across_runs_and_workers(duration_sweep, tmp_path):
    manager = FileManager(tmp_path)
    first = write_sweep_csv(run_sweep(duration_sweep), duration_sweep, "first.csv", manager)
    second = write_sweep_csv(run_sweep(duration_sweep), duration_sweep, "second.csv", manager)
    parallel = write_sweep_csv(run_sweep(duration_sweep, workers=2), duration_sweep, "parallel.csv", manager)
    content = (tmp_path / "first.csv").read_bytes()
    assert content == (tmp_path / "second.csv").read_bytes()
    assert content == (tmp_path / "parallel.csv").read_bytes()
    assert first.endswith("first.csv") and second and parallel
    assert b"\r\n" not in content


def test_sweep_csv_round_trips_through_file_manager(duration_sweep, tmp_path):
    manager = FileManager(tmp_path)
    write_sweep_csv(run_sweep(duration_sweep), duration_sweep, "out/sweep.csv", manager)
    rows = manager.read_csv("out/sweep.csv")
    assert len(rows) == 5
    assert float(rows[0]["value"]) == 0.1
    assert float(rows[-1]["value"]) == 100.0
    assert rows[0]["eta_carnot"] == "0.5"
