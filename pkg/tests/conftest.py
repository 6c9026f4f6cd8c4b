import json

import numpy as np
import pytest

from src.dynamics import Protocol
from src.engine import Cycle, Stroke
from src.thermocore import Bath


@pytest.fixture
def otto_cycle():
    """Factory for the two-stroke Otto cycle: quench up, hot contact, quench down, cold contact."""
    def build(duration=1.0, t_hot=2.0, t_cold=1.0, e_hot=3.0, e_cold=2.0, gamma=1.0,
              mu_hot=0.0, mu_cold=0.0, quasistatic=False):
        baths = [Bath("hot", t_hot, mu_hot, gamma), Bath("cold", t_cold, mu_cold, gamma)]
        strokes = [
            Stroke(Protocol.linear(e_cold, e_hot, 0.0)),
            Stroke(Protocol.constant(e_hot, duration), "hot", quasistatic),
            Stroke(Protocol.linear(e_hot, e_cold, 0.0)),
            Stroke(Protocol.constant(e_cold, duration), "cold", quasistatic),
        ]
        return Cycle(strokes, baths)
    return build


@pytest.fixture
def otto_config():
    return {
        "baths": [
            {"label": "hot", "T": 2.0, "mu": 0.0, "Gamma": 1.0},
            {"label": "cold", "T": 1.0, "mu": 0.0, "Gamma": 1.0},
        ],
        "strokes": [
            {"duration": 0.0, "bath": None, "protocol": {"kind": "linear", "start": 2.0, "end": 3.0}},
            {"duration": 1.0, "bath": "hot", "protocol": {"kind": "constant", "energy": 3.0}},
            {"duration": 0.0, "bath": None, "protocol": {"kind": "linear", "start": 3.0, "end": 2.0}},
            {"duration": 1.0, "bath": "cold", "protocol": {"kind": "constant", "energy": 2.0}},
        ],
    }


@pytest.fixture
def write_config(tmp_path):
    def write(data, name="config.json"):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)
    return write


@pytest.fixture
def random_cycle():
    """Factory for random two- or three-bath cycles of linear ramps joined by quenches."""
    def build(rng, chemical=False, n_baths=2):
        temperatures = [rng.uniform(1.2, 4.0), rng.uniform(0.3, 1.0), rng.uniform(0.3, 4.0)][:n_baths]
        potentials = rng.uniform(-1.0, 1.0, n_baths) if chemical else np.zeros(n_baths)
        couplings = rng.uniform(0.2, 3.0, n_baths)
        durations = rng.uniform(0.05, 3.0, n_baths)
        levels = rng.uniform(-1.0, 5.0, 2 * n_baths)
        labels = ["hot", "cold", "warm"][:n_baths]
        baths = [Bath(label, float(t), float(mu), float(gamma))
                 for label, t, mu, gamma in zip(labels, temperatures, potentials, couplings)]
        strokes = []
        for i, label in enumerate(labels):
            start, end = levels[2 * i], levels[2 * i + 1]
            strokes.append(Stroke(Protocol.linear(levels[2 * i - 1], start, 0.0)))
            strokes.append(Stroke(Protocol.linear(start, end, durations[i]), label))
        return Cycle(strokes, baths)
    return build
