"""Evaluation metrics: utility, throughput accounting, transmission delay."""
from dataclasses import dataclass

from .optimizer import OptResult
from .timing import TimingParams


@dataclass(frozen=True)
class SimStats:
    """Aggregate metrics over a run of frames.

    mean_throughput is bits per frame; utility is the mean fraction of the
    frame spent in granted transmission slots; mean_delay is the mean time
    from frame start to transmission end, microseconds, averaged over frames
    (a frame with no delivery contributes the full frame length).
    """

    frames: int
    mean_throughput: float
    utility: float
    mean_delay: float
    infeasible_frames: int

    def to_dict(self) -> dict:
        return {"frames": self.frames,
                "mean_throughput": self.mean_throughput,
                "utility": self.utility,
                "mean_delay": self.mean_delay,
                "infeasible_frames": self.infeasible_frames}

    @classmethod
    def from_dict(cls, d: dict) -> "SimStats":
        return cls(frames=int(d["frames"]),
                   mean_throughput=float(d["mean_throughput"]),
                   utility=float(d["utility"]),
                   mean_delay=float(d["mean_delay"]),
                   infeasible_frames=int(d["infeasible_frames"]))


def utility(trace, params: TimingParams) -> float:
    """Fraction of the frame spent in the transmission period."""
    return trace.top_elapsed / params.t_frame


def frame_delay(trace, params: TimingParams) -> float:
    """Mean transmission delay of one frame's delivered devices.

    Winner j (1-based, in grant order) finishes at
    t_np + cop_elapsed + t_ap + j * t_tran. A frame that delivers nothing
    counts as the full frame length.
    """
    m = trace.m_success
    if m == 0:
        return params.t_frame
    return (params.t_np + trace.cop_elapsed + params.t_ap
            + 0.5 * (m + 1) * params.t_tran)


def analytic_delay(opt: OptResult, params: TimingParams) -> float:
    """Closed-form mean transmission delay at an optimizer operating point:
    the overhead periods, the expected contention time, and the mean wait
    for a slot in a transmission period that fills the rest of the frame."""
    if opt.m_opt < 1:
        raise ValueError("delay undefined with no admitted devices")
    t_top_rem = params.t_frame - opt.t_cop_opt - params.t_np - params.t_ap
    mean_top = 0.5 * t_top_rem * (1.0 - 1.0 / opt.m_opt) + params.t_tran
    return params.t_np + opt.t_cop_opt + params.t_ap + mean_top
