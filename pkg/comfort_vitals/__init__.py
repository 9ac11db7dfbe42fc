from comfort_vitals.tasks.analyze_study import analyze_study_table
from comfort_vitals.tasks.ippg import ippg
from comfort_vitals.tasks.process_signal import process_ecg, process_resp
from comfort_vitals.tasks.suggest import suggest
from comfort_vitals.tasks.synth import synth


__comfort__ = [
    synth,
    process_ecg,
    process_resp,
    ippg,
    analyze_study_table,
    suggest,
]
