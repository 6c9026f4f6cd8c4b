import io

import pytest

from src.harness.config import load_config
from src.harness.runner import (
    EXIT_OK,
    evaluate,
    format_number,
    ledger_cells,
    ledger_columns,
    run_single,
    run_verify,
    verify,
)
from src.storage.file_manager import FileManager


@pytest.fixture
def equilibrium_config():
    return {
        "baths": [{"label": "b", "T": 1.0, "mu": 0.0, "Gamma": 1.0}],
        "strokes": [{"duration": 1.0, "bath": "b", "protocol": {"kind": "constant", "energy": 1.0}}],
    }


def test_format_number():
    assert format_number(None) == ""
    assert format_number(12) == "12"
    assert format_number(0.1) == "0.10000000000000001"


def test_evaluate_otto_config(write_config, otto_config):
    report, bounds = evaluate(load_config(write_config(otto_config)))
    assert report.efficiency == pytest.approx(1.0 / 3.0, abs=1e-9)
    assert bounds.carnot == 0.5
    assert bounds.information is not None
    assert bounds.ok


def test_undefined_values_become_empty_cells(write_config, equilibrium_config):
    config = load_config(write_config(equilibrium_config))
    report, bounds = evaluate(config)
    cells = dict(zip(ledger_columns(config.bath_labels), ledger_cells(report, bounds, config.bath_labels)))
    assert cells["eta"] == ""
    assert cells["eta_clausius"] == ""
    assert cells["eta_carnot"] == "0"
    assert cells["converged_after"] == "3"


def test_run_single_prints_report_and_row(write_config, otto_config):
    stream = io.StringIO()
    code = run_single(load_config(write_config(otto_config)), None, FileManager(), stream)
    output = stream.getvalue().splitlines()
    assert code == EXIT_OK
    assert any(line.split() == ["efficiency", "0.333333333333"] for line in output)
    header, row = output[-2].split(","), output[-1].split(",")
    assert float(dict(zip(header, row))["eta"]) == pytest.approx(1.0 / 3.0, abs=1e-9)


def test_run_single_writes_csv(write_config, otto_config, tmp_path):
    manager = FileManager(tmp_path)
    run_single(load_config(write_config(otto_config)), "run.csv", manager, io.StringIO())
    rows = manager.read_csv("run.csv")
    assert len(rows) == 1
    assert float(rows[0]["Q_hot"]) == pytest.approx(3.0 * float(rows[0]["W_net"]), rel=1e-9)


def test_verify_passes_on_otto_config(write_config, otto_config):
    results = {check.name: check for check in verify(load_config(write_config(otto_config)))}
    assert results["kelvin"].passed is None
    assert all(check.passed is not False for check in results.values())
    assert {"initial-state independence", "periodicity", "first law", "second law", "carnot",
            "bound ordering", "step halving"} <= set(results)


def test_verify_applies_kelvin_to_single_bath(write_config, equilibrium_config):
    results = {check.name: check for check in verify(load_config(write_config(equilibrium_config)))}
    assert results["kelvin"].passed is True
    assert results["carnot"].passed is None


def test_run_verify_summary(write_config, otto_config):
    stream = io.StringIO()
    assert run_verify(load_config(write_config(otto_config)), stream) == EXIT_OK
    assert stream.getvalue().rstrip().endswith("all checks passed")
