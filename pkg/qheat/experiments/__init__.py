from .sweeps import evaluate_point, bath_label, run_sweep, find_crossings
from .rectification import rectification_scan
from .sudden_death import sudden_death_temperature
