"""Discrete-event simulation of the hybrid MAC frame.

A frame is notification broadcast, a p-persistent contention period stopped
by a two-threshold rule (success count or elapsed time, whichever first),
an announcement broadcast, then TDMA slots for the contention winners.

Contention is slotted: a slot with zero attempts is an idle unit, one attempt
is a successful request exchange, two or more is a collision. Busy periods
are indivisible; one that starts before the time threshold completes, so the
realized contention period can overshoot the threshold by at most one busy
period.
"""
import enum
import json
import math
from dataclasses import dataclass, field

import numpy as np

from .config import ScenarioConfig, draw_l_active
from .errors import InfeasibleError
from .metrics import SimStats, frame_delay
from .optimizer import OptResult, optimize
from .timing import TimingParams

IDLE = "idle"
COLLISION = "collision"
SUCCESS = "success"

STOP_M = "m_threshold"
STOP_TIME = "time_threshold"


class Mode(enum.Enum):
    SLEEPING = "sleeping"
    CONTENDING = "contending"
    AWAITING_AP = "awaiting_ap"
    TRANSMITTING = "transmitting"
    DONE = "done"


class DeviceState:
    """Per-frame device bookkeeping; granted_slot is set iff the device won
    contention this frame."""

    __slots__ = ("id", "has_data", "granted_slot", "mode")

    def __init__(self, device_id: int, has_data: bool):
        self.id = device_id
        self.has_data = has_data
        self.granted_slot = None
        self.mode = Mode.CONTENDING if has_data else Mode.SLEEPING


@dataclass
class FrameTrace:
    """Record of one simulated frame."""

    frame_index: int
    l_active: int
    m_success: int
    cop_elapsed: float
    top_elapsed: float
    stop_reason: str
    n_idle_slots: int
    n_collisions: int
    winners: list = field(default_factory=list)
    cop_events: list | None = None  # [(kind, duration)] when recording

    def to_json_line(self) -> str:
        return json.dumps({
            "frame_index": self.frame_index,
            "l_active": self.l_active,
            "m_success": self.m_success,
            "cop_elapsed": round(self.cop_elapsed, 6),
            "top_elapsed": round(self.top_elapsed, 6),
            "stop_reason": self.stop_reason,
        }, sort_keys=True)


def _pow1m(p: float, k: float) -> float:
    return math.exp(k * math.log1p(-p))


def run_cop(l_active: int, p: float, m_cap: int, t_cop_cap: float,
            params: TimingParams, rng: np.random.Generator,
            record_events: bool = False) -> FrameTrace:
    """Simulate one contention period.

    Statistically exact but collapsed: the run of failure slots between
    consecutive successes is drawn as a geometric count and split into idles
    and collisions, instead of looping slot by slot. Runs that straddle the
    time threshold are replayed slot by slot (slot types within a run are
    exchangeable) so the stop rule lands on the same slot boundary as a
    naive per-slot simulation.
    """
    if not 0.0 < p <= 1.0:
        raise ValueError(f"p={p} not in (0, 1]")
    di, dc, ds = params.delta_idle, params.delta_coll, params.delta_succ
    events = [] if record_events else None

    contenders = list(range(l_active))
    winners: list[int] = []
    elapsed = 0.0
    n_idle = 0
    n_coll = 0
    stop = None

    def take_winner():
        j = int(rng.integers(len(contenders)))
        contenders[j], contenders[-1] = contenders[-1], contenders[j]
        winners.append(contenders.pop())

    while True:
        if len(winners) >= m_cap:
            stop = STOP_M
            break
        if elapsed >= t_cop_cap:
            stop = STOP_TIME
            break
        n = len(contenders)
        if n == 0:
            # nobody left to attempt; the channel idles out the budget
            k = max(1, math.ceil((t_cop_cap - elapsed) / di))
            elapsed += k * di
            n_idle += k
            if record_events:
                events.extend((IDLE, di) for _ in range(k))
            stop = STOP_TIME
            break

        if p < 1.0:
            p0 = _pow1m(p, n)
            p1 = n * p * _pow1m(p, n - 1)
        else:
            p0 = 0.0
            p1 = 1.0 if n == 1 else 0.0

        if p1 < 1e-300:
            # success essentially impossible; fill failure slots to the cap
            p_coll = 1.0 - p0
            while elapsed < t_cop_cap:
                if rng.random() < p_coll:
                    elapsed += dc
                    n_coll += 1
                    if record_events:
                        events.append((COLLISION, dc))
                else:
                    elapsed += di
                    n_idle += 1
                    if record_events:
                        events.append((IDLE, di))
            stop = STOP_TIME
            break

        k_fail = int(rng.geometric(p1)) - 1
        run_coll = int(rng.binomial(k_fail, max(0.0, 1.0 - p0 - p1)
                                    / (1.0 - p1))) if k_fail else 0
        run_idle = k_fail - run_coll
        dt = run_idle * di + run_coll * dc

        if elapsed + dt < t_cop_cap:
            elapsed += dt + ds
            n_idle += run_idle
            n_coll += run_coll
            if record_events:
                events.extend((IDLE, di) for _ in range(run_idle))
                events.extend((COLLISION, dc) for _ in range(run_coll))
                events.append((SUCCESS, ds))
            take_winner()
        else:
            # the time threshold lands inside this failure run
            while elapsed < t_cop_cap and (run_coll or run_idle):
                if rng.random() * (run_coll + run_idle) < run_coll:
                    run_coll -= 1
                    elapsed += dc
                    n_coll += 1
                    if record_events:
                        events.append((COLLISION, dc))
                else:
                    run_idle -= 1
                    elapsed += di
                    n_idle += 1
                    if record_events:
                        events.append((IDLE, di))
            if elapsed < t_cop_cap:
                # float-boundary edge: failures consumed just under the cap
                elapsed += ds
                if record_events:
                    events.append((SUCCESS, ds))
                take_winner()

    return FrameTrace(
        frame_index=0,
        l_active=l_active,
        m_success=len(winners),
        cop_elapsed=elapsed,
        top_elapsed=0.0,
        stop_reason=stop,
        n_idle_slots=n_idle,
        n_collisions=n_coll,
        winners=winners,
        cop_events=events,
    )


def default_cop_cap(m_cap: int, params: TimingParams) -> float:
    """Largest contention-time threshold that still guarantees the frame
    budget: whatever the frame can spare after overheads and a full slate of
    m_cap transmissions, minus one busy period of overshoot allowance."""
    return (params.t_frame - params.t_np - params.t_ap
            - m_cap * params.t_tran - params.delta_succ)


def run_frame(frame_index: int, l_active: int, opt: OptResult,
              params: TimingParams, rng: np.random.Generator,
              record_events: bool = False, t_cop_cap: float | None = None,
              devices: list[DeviceState] | None = None) -> FrameTrace:
    """Simulate one full frame and return its trace.

    Winners are granted consecutive TDMA slots in contention-success order.
    The admission cap and contention probability come from opt, which may
    have been computed for a stale contender count.
    """
    cap = default_cop_cap(opt.m_opt, params) if t_cop_cap is None else t_cop_cap
    trace = run_cop(l_active, opt.p_opt, opt.m_opt, cap, params, rng,
                    record_events=record_events)
    trace.frame_index = frame_index
    trace.top_elapsed = trace.m_success * params.t_tran

    if devices is not None:
        slot_of = {dev: slot for slot, dev in enumerate(trace.winners)}
        for d in devices:
            if not d.has_data:
                continue
            if d.id in slot_of:
                d.granted_slot = slot_of[d.id]
                d.mode = Mode.DONE
            else:
                d.mode = Mode.SLEEPING

    occupancy = (params.t_np + trace.cop_elapsed + params.t_ap
                 + trace.top_elapsed)
    if occupancy > params.t_frame + 1e-9:
        raise RuntimeError(
            f"frame overrun: {occupancy} us in a {params.t_frame} us frame")
    return trace


def run_scenario(config: ScenarioConfig, params: TimingParams | None = None,
                 trace_sink=None) -> SimStats:
    """Run a hybrid-MAC scenario and aggregate its statistics.

    Optimization runs per frame for that frame's contender count (memoized),
    unless config.pin_opt_l fixes the broadcast parameters to those computed
    once for a nominal design load. Bit-for-bit reproducible for a given
    (config, params, seed).
    """
    params = config.timing if params is None else params
    rng = np.random.default_rng(config.seed)
    opt_cache: dict[int, OptResult] = {}

    def opt_for(l: int) -> OptResult:
        if l not in opt_cache:
            opt_cache[l] = optimize(l, params,
                                    include_overheads=config.include_overheads,
                                    exact=config.use_exact_cop)
        return opt_cache[l]

    pinned = opt_for(config.pin_opt_l) if config.pin_opt_l else None

    frames = 0
    infeasible = 0
    sum_m = 0
    sum_util = 0.0
    sum_delay = 0.0
    for frame_index in range(config.frames):
        l = draw_l_active(config, rng)
        if pinned is not None:
            opt = pinned
        elif l < 2:
            # 0 contenders: empty frame; 1 contender: trivial grant at p=1
            opt = OptResult(m_opt=min(l, 1), p_opt=1.0, t_cop_opt=0.0,
                            c_total=min(l, 1) * params.rate * params.t_tran)
        else:
            try:
                opt = opt_for(l)
            except InfeasibleError:
                infeasible += 1
                continue
        if opt.m_opt == 0:
            trace = FrameTrace(frame_index, l, 0, 0.0, 0.0, STOP_M, 0, 0)
        else:
            trace = run_frame(frame_index, l, opt, params, rng)
        frames += 1
        sum_m += trace.m_success
        sum_util += trace.top_elapsed / params.t_frame
        sum_delay += frame_delay(trace, params)
        if trace_sink is not None:
            trace_sink(trace.to_json_line())

    n = max(frames, 1)
    return SimStats(
        frames=frames,
        mean_throughput=sum_m / n * params.rate * params.t_tran,
        utility=sum_util / n,
        mean_delay=sum_delay / n,
        infeasible_frames=infeasible,
    )
