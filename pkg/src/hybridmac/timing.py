"""Protocol timing constants and contention operating points.

All durations are microseconds; the data rate is bits per microsecond.
"""
from dataclasses import dataclass, fields

from .errors import DegenerateIndexError, ProbabilityDomainError


@dataclass(frozen=True)
class TimingParams:
    """Per-frame time budget and message durations for the hybrid MAC."""

    t_frame: float      # frame length
    t_np: float         # notification period
    t_ap: float         # announcement period
    t_tran: float       # per-device transmission slot
    t_req: float        # transmission-request message
    t_ack: float        # ACK message
    sifs: float         # short inter-frame space
    bifs: float         # backoff inter-frame space
    delta_idle: float = 10.0   # idle slot unit
    rate: float = 1728.0       # bits per microsecond

    def __post_init__(self):
        for f in fields(self):
            if getattr(self, f.name) <= 0:
                raise ValueError(f"{f.name} must be strictly positive")
        if self.t_np + self.t_ap + self.t_tran > self.t_frame:
            raise ValueError(
                "frame too short: t_np + t_ap + t_tran exceeds t_frame")

    @property
    def delta_coll(self) -> float:
        """Duration of a collision period on the contention channel."""
        return self.t_req + self.bifs

    @property
    def delta_succ(self) -> float:
        """Duration of a successful request/ACK exchange."""
        return self.t_req + self.sifs + self.t_ack + self.bifs


def default_timing(t_frame: float = 50_000.0,
                   delta_idle: float = 10.0) -> TimingParams:
    """Default radio profile: 1.728 Gbps, 1 ms data slots, 22.2 us requests.

    delta_idle is not part of the radio profile and defaults to 10 us; it is
    the one knob the contention-cost model is sensitive to, so it stays
    configurable.
    """
    return TimingParams(
        t_frame=t_frame,
        t_np=10.2,
        t_ap=10.2,
        t_tran=1000.0,
        t_req=22.2,
        t_ack=7.5,
        sifs=2.5,
        bifs=7.5,
        delta_idle=delta_idle,
        rate=1728.0,
    )


@dataclass(frozen=True)
class ContentionPoint:
    """An operating point of the contention period: L contenders, M target
    successes, per-attempt probability p."""

    l_active: int
    m_target: int
    p: float

    def __post_init__(self):
        if not 0.0 < self.p < 1.0:
            raise ProbabilityDomainError(f"p={self.p} not in (0, 1)")
        if self.m_target < 0:
            raise ValueError("m_target must be nonnegative")
        # m_target == l_active leaves zero contenders for the last success
        # in the closed-form model (division by zero), so it is rejected.
        if self.m_target > 0 and self.m_target > self.l_active - 1:
            raise DegenerateIndexError(
                f"m_target={self.m_target} requires at least "
                f"{self.m_target + 1} contenders, have {self.l_active}")
