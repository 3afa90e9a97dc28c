"""Slotted-ALOHA and static-TDMA reference protocols.

To keep the three protocols on one axis, a baseline "delivery" is one
device's transmission opportunity for the frame and is credited
rate * t_tran bits, the same unit as a hybrid-MAC grant.
"""
import math
from dataclasses import dataclass

import numpy as np

from .config import ScenarioConfig, draw_l_active
from .metrics import SimStats
from .timing import TimingParams


@dataclass(frozen=True)
class AlohaConfig:
    """Slotted ALOHA: each backlogged device transmits with probability q in
    every slot; slot defaults to the request-exchange duration."""

    q: float = 0.08
    slot: float | None = None

    def __post_init__(self):
        if not 0.0 < self.q <= 1.0:
            raise ValueError("q must be in (0, 1]")
        if self.slot is not None and self.slot <= 0:
            raise ValueError("slot must be positive")

    def slot_for(self, params: TimingParams) -> float:
        return self.slot if self.slot is not None else params.delta_succ


@dataclass(frozen=True)
class TdmaConfig:
    """Static TDMA: slots cycle over all k_total devices regardless of
    activity; slot defaults to the transmission slot length."""

    k_total: int
    slot: float | None = None

    def __post_init__(self):
        if self.k_total < 1:
            raise ValueError("k_total must be >= 1")
        if self.slot is not None and self.slot <= 0:
            raise ValueError("slot must be positive")

    def slot_for(self, params: TimingParams) -> float:
        return self.slot if self.slot is not None else params.t_tran


@dataclass(frozen=True)
class BaselineFrame:
    """One frame of a baseline protocol."""

    delivered: float      # devices served (fractional for expected TDMA)
    bits: float
    utility: float
    delay: float          # mean delivery completion; t_frame if none


def run_aloha_frame(l_active: int, cfg: AlohaConfig, params: TimingParams,
                    rng: np.random.Generator) -> BaselineFrame:
    """Simulate one ALOHA frame with a depleting backlog.

    A slot with exactly one transmitter delivers that device, which then
    stays quiet for the rest of the frame; nothing carries over to the next
    frame. Sampled by drawing the geometric gap to each next singleton slot,
    which is distributionally exact and skips the empty/collision slots.
    """
    slot = cfg.slot_for(params)
    n_slots = int(params.t_frame // slot)
    n = l_active
    t = 0  # slots consumed
    completions = []
    while n > 0 and t < n_slots:
        if cfg.q < 1.0:
            p1 = n * cfg.q * math.exp((n - 1) * math.log1p(-cfg.q))
        else:
            p1 = 1.0 if n == 1 else 0.0
        if p1 < 1e-300:
            break
        gap = int(rng.geometric(p1))
        if t + gap > n_slots:
            break
        t += gap
        completions.append(t * slot)
        n -= 1

    delivered = len(completions)
    return BaselineFrame(
        delivered=delivered,
        bits=delivered * params.rate * params.t_tran,
        utility=delivered * slot / params.t_frame,
        delay=(sum(completions) / delivered) if delivered else params.t_frame,
    )


def run_tdma_frame(l_active: int, cfg: TdmaConfig,
                   params: TimingParams) -> BaselineFrame:
    """One TDMA frame, deterministic: with slot owners drawn uniformly from
    the population, each of the frame's slots is useful with probability
    l_active / k_total, and the expected occupancy is used directly."""
    slot = cfg.slot_for(params)
    n_slots = int(params.t_frame // slot)
    frac = min(l_active, cfg.k_total) / cfg.k_total
    delivered = n_slots * frac
    return BaselineFrame(
        delivered=delivered,
        bits=delivered * params.rate * slot,
        utility=delivered * slot / params.t_frame,
        delay=0.5 * (n_slots + 1) * slot if delivered > 0 else params.t_frame,
    )


def run_baseline_scenario(config: ScenarioConfig,
                          params: TimingParams | None = None) -> SimStats:
    """Aggregate a baseline protocol over config.frames frames."""
    params = config.timing if params is None else params
    rng = np.random.default_rng(config.seed)
    if config.protocol == "aloha":
        cfg = AlohaConfig(q=config.aloha_q)
        run = lambda l: run_aloha_frame(l, cfg, params, rng)
    elif config.protocol == "tdma":
        cfg = TdmaConfig(k_total=max(config.k_total, 1))
        run = lambda l: run_tdma_frame(l, cfg, params)
    else:
        raise ValueError(f"not a baseline protocol: {config.protocol!r}")

    sum_bits = 0.0
    sum_util = 0.0
    sum_delay = 0.0
    for _ in range(config.frames):
        l = draw_l_active(config, rng)
        fr = run(l)
        sum_bits += fr.bits
        sum_util += fr.utility
        sum_delay += fr.delay
    n = config.frames
    return SimStats(frames=n, mean_throughput=sum_bits / n,
                    utility=sum_util / n, mean_delay=sum_delay / n,
                    infeasible_frames=0)
