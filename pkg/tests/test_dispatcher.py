import pytest

from comfort_vitals.dispatcher import dispatcher, estimate, get_pipeline
from comfort_vitals.exceptions import ComfortVitalsException, InvalidParameterError
from comfort_vitals.pipelines.ecg import EcgPipeline
from comfort_vitals.pipelines.ippg import IppgBreathPipeline
from comfort_vitals.pipelines.respiration import RespirationPipeline
from comfort_vitals.signal_core import TimeSeries
from comfort_vitals.utils import SEED_ENV_VAR, resolve_seed, write_json_to_file


class TestGetPipeline:
    @pytest.mark.parametrize(
        "kind, expected",
        [("ecg", EcgPipeline), ("resp", RespirationPipeline), ("ippg_rr", IppgBreathPipeline)],
    )
    def test_default_mapping(self, kind, expected):
        assert get_pipeline(kind) is expected

    def test_unknown_kind(self):
        with pytest.raises(ComfortVitalsException, match="preemptively failed"):
            get_pipeline("eeg")

    def test_unknown_class(self):
        with pytest.raises(ComfortVitalsException, match="preemptively failed"):
            get_pipeline("ecg", {"ecg": "comfort_vitals.pipelines.ecg.MissingPipeline"})

    def test_mapping_override(self):
        mapping = {"chest": "comfort_vitals.pipelines.respiration.RespirationPipeline"}
        assert get_pipeline("chest", mapping) is RespirationPipeline


class TestDispatcher:
    def test_estimate_by_label(self, ecg_72, resp_15):
        assert estimate(ecg_72).rate_per_min == pytest.approx(72, abs=1)
        assert estimate(resp_15).rate_per_min == pytest.approx(15, abs=0.5)

    def test_runs_named_method(self, resp_15):
        result = dispatcher("resp", "estimate", resp_15)
        assert result == RespirationPipeline.estimate(resp_15)

    def test_unknown_method(self, resp_15):
        with pytest.raises(ComfortVitalsException, match="preemptively failed"):
            dispatcher("resp", "integrate", resp_15)

    def test_signal_without_label(self):
        with pytest.raises(ComfortVitalsException):
            estimate(TimeSeries([0.0] * 100, 10))


class TestResolveSeed:
    def test_explicit_seed_wins(self, monkeypatch):
        monkeypatch.setenv(SEED_ENV_VAR, "9")
        assert resolve_seed(3) == 3

    def test_environment(self, monkeypatch):
        monkeypatch.setenv(SEED_ENV_VAR, "9")
        assert resolve_seed() == 9

    def test_default(self, monkeypatch):
        monkeypatch.delenv(SEED_ENV_VAR, raising=False)
        assert resolve_seed() == 0

    def test_invalid_environment(self, monkeypatch):
        monkeypatch.setenv(SEED_ENV_VAR, "seven")
        with pytest.raises(InvalidParameterError):
            resolve_seed()


def test_write_json_to_file_creates_directories(tmp_path):
    path = tmp_path / "out" / "rate.json"
    write_json_to_file(str(path), {"rate_per_min": 72.0})
    assert path.read_text() == '{\n    "rate_per_min": 72.0\n}'
