import numpy as np
import pytest

from comfort_vitals.io import embedded_study
from comfort_vitals.synth import SynthSpec, synth_ecg, synth_resp


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def hr_table():
    return embedded_study("hr")


@pytest.fixture
def rr_table():
    return embedded_study("rr")


@pytest.fixture
def ecg_72():
    return synth_ecg(SynthSpec(rate_per_min=72, duration_s=60, sample_rate_hz=250, noise_rms=0.05, seed=1))


@pytest.fixture
def resp_15():
    return synth_resp(SynthSpec(rate_per_min=15, duration_s=120, sample_rate_hz=32))
