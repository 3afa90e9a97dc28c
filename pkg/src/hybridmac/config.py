"""Scenario configuration: TOML ingestion and the default profile."""
import sys
from dataclasses import dataclass, field, fields, replace

import numpy as np

from .errors import ConfigError
from .timing import TimingParams, default_timing

if sys.version_info >= (3, 11):
    import tomllib as _toml
else:
    import tomli as _toml

PROTOCOLS = ("hybrid", "aloha", "tdma")
ACTIVITY_RULES = ("fixed_fraction", "per_device_prob", "fixed_count")


@dataclass(frozen=True)
class ScenarioConfig:
    """One experiment: device population, activity rule, protocol, length."""

    k_total: int = 500
    activity_rule: str = "fixed_fraction"
    activity_value: float = 0.3
    protocol: str = "hybrid"
    frames: int = 1000
    seed: int = 42
    aloha_q: float = 0.08
    include_overheads: bool = False
    pin_opt_l: int | None = None    # freeze broadcast params at this load
    use_exact_cop: bool = False     # exact contention cost in the optimizer
    timing: TimingParams = field(default_factory=default_timing)

    def __post_init__(self):
        if self.frames < 1:
            raise ConfigError("frames must be >= 1", field="frames")
        if self.protocol not in PROTOCOLS:
            raise ConfigError(f"unknown protocol {self.protocol!r}",
                              field="protocol")
        if self.activity_rule not in ACTIVITY_RULES:
            raise ConfigError(f"unknown activity_rule {self.activity_rule!r}",
                              field="activity_rule")
        if self.activity_rule in ("fixed_fraction", "per_device_prob") \
                and not 0.0 <= self.activity_value <= 1.0:
            raise ConfigError("activity_value must be in [0, 1]",
                              field="activity_value")
        if not 0.0 < self.aloha_q <= 1.0:
            raise ConfigError("aloha_q must be in (0, 1]", field="aloha_q")
        if self.k_total < 0:
            raise ConfigError("k_total must be nonnegative", field="k_total")


def draw_l_active(config: ScenarioConfig, rng: np.random.Generator) -> int:
    """Number of devices with data this frame, per the activity rule."""
    if config.activity_rule == "fixed_fraction":
        return int(round(config.activity_value * config.k_total))
    if config.activity_rule == "per_device_prob":
        return int(rng.binomial(config.k_total, config.activity_value))
    return int(config.activity_value)  # fixed_count


_TIMING_FIELDS = [f.name for f in fields(TimingParams)]


def load_config(path: str) -> ScenarioConfig:
    """Read a scenario from a TOML file with [timing] and [scenario] tables.

    Either table may be omitted entirely (defaults apply), but a [timing]
    table that is present must be complete.
    """
    try:
        with open(path, "rb") as fh:
            raw = _toml.load(fh)
    except OSError as e:
        raise ConfigError(f"cannot read config file {path}: {e}") from e
    except _toml.TOMLDecodeError as e:
        raise ConfigError(f"malformed config file {path}: {e}") from e

    if "timing" in raw:
        tim = raw["timing"]
        for name in _TIMING_FIELDS:
            if name not in tim:
                raise ConfigError(f"[timing] is missing field {name!r}",
                                  field=name)
        unknown = set(tim) - set(_TIMING_FIELDS)
        if unknown:
            raise ConfigError(f"[timing] has unknown fields {sorted(unknown)}",
                              field=sorted(unknown)[0])
        try:
            timing = TimingParams(**{k: float(v) for k, v in tim.items()})
        except (TypeError, ValueError) as e:
            raise ConfigError(f"invalid [timing]: {e}") from e
    else:
        timing = default_timing()

    sc = raw.get("scenario", {})
    known = {f.name for f in fields(ScenarioConfig)} - {"timing"}
    unknown = set(sc) - known
    if unknown:
        raise ConfigError(f"[scenario] has unknown fields {sorted(unknown)}",
                          field=sorted(unknown)[0])
    return ScenarioConfig(timing=timing, **sc)


def with_timing(config: ScenarioConfig, timing: TimingParams) -> ScenarioConfig:
    return replace(config, timing=timing)
