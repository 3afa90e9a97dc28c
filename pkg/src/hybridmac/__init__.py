"""Frame-based hybrid contention/TDMA MAC: analytic contention model,
throughput optimizer, discrete-event simulator, baselines, and sweeps."""

from .baselines import AlohaConfig, BaselineFrame, TdmaConfig, \
    run_aloha_frame, run_baseline_scenario, run_tdma_frame
from .config import ScenarioConfig, load_config
from .contention import cop_cost_per_success, expected_collisions, \
    expected_idle, t_cop_asymptotic, t_cop_exact, t_cop_second_derivative_sign
from .engine import DeviceState, FrameTrace, Mode, default_cop_cap, \
    run_cop, run_frame, run_scenario
from .errors import ConfigError, DegenerateIndexError, InfeasibleError, \
    ProbabilityDomainError, StepTooLargeError
from .metrics import SimStats, analytic_delay, frame_delay, utility
from .optimizer import OptResult, golden_section_min, min_cop_over_p, optimize
from .sweep import SweepCell, cell_seed, sweep, write_csv
from .timing import ContentionPoint, TimingParams, default_timing

__all__ = [
    "AlohaConfig", "BaselineFrame", "ConfigError", "ContentionPoint",
    "DegenerateIndexError", "DeviceState", "FrameTrace", "InfeasibleError",
    "Mode", "OptResult", "ProbabilityDomainError", "ScenarioConfig",
    "SimStats", "StepTooLargeError", "SweepCell", "TdmaConfig",
    "TimingParams", "analytic_delay", "cell_seed", "cop_cost_per_success",
    "default_cop_cap", "default_timing", "expected_collisions",
    "expected_idle", "frame_delay", "golden_section_min", "load_config",
    "min_cop_over_p", "optimize", "run_aloha_frame", "run_baseline_scenario",
    "run_cop", "run_frame", "run_scenario", "run_tdma_frame", "sweep",
    "t_cop_asymptotic", "t_cop_exact", "t_cop_second_derivative_sign",
    "utility", "write_csv",
]

__version__ = "0.1.0"
