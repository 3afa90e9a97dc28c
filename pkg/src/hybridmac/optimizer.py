"""Per-frame throughput maximization.

Chooses the admission count M and contention probability p maximizing
M * rate * t_tran under the frame-budget constraint
T_cop(M, p) + M * t_tran <= budget. The objective depends on M only, so the
solver finds the largest feasible M, with p chosen to minimize contention
time (maximum slack) at that M.
"""
import math
from dataclasses import dataclass

from .contention import t_cop_asymptotic, t_cop_exact
from .errors import InfeasibleError
from .timing import ContentionPoint, TimingParams

_P_EPS = 1e-6
_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class OptResult:
    """Solver output: admission cap, contention probability, expected
    contention time, and the per-frame objective in bits."""

    m_opt: int
    p_opt: float
    t_cop_opt: float
    c_total: float

    def to_dict(self) -> dict:
        return {"m_opt": self.m_opt, "p_opt": self.p_opt,
                "t_cop_opt": self.t_cop_opt, "c_total": self.c_total}

    @classmethod
    def from_dict(cls, d: dict) -> "OptResult":
        return cls(m_opt=int(d["m_opt"]), p_opt=float(d["p_opt"]),
                   t_cop_opt=float(d["t_cop_opt"]),
                   c_total=float(d["c_total"]))


def golden_section_min(f, a: float, b: float, tol: float) -> float:
    """Minimize a unimodal f on [a, b] to within tol of the minimizer."""
    c = b - (b - a) * _INV_PHI
    d = a + (b - a) * _INV_PHI
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - (b - a) * _INV_PHI
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + (b - a) * _INV_PHI
            fd = f(d)
    return 0.5 * (a + b)


def min_cop_over_p(m: int, l_active: int, params: TimingParams,
                   tol: float = 1e-7, exact: bool = False):
    """Contention probability minimizing the expected contention time for m
    successes out of l_active contenders. Returns (p, t_cop)."""
    t_cop = t_cop_exact if exact else t_cop_asymptotic

    def cost(p: float) -> float:
        return t_cop(ContentionPoint(l_active, m, p), params)

    p = golden_section_min(cost, _P_EPS, 1.0 - _P_EPS, tol)
    return p, cost(p)


def optimize(l_active: int, params: TimingParams,
             include_overheads: bool = False, exact: bool = False,
             tol: float = 1e-7) -> OptResult:
    """Largest admission count M whose minimal contention time still fits the
    frame budget, via binary search on M (the per-M cost is increasing).

    The budget is the whole frame by default; include_overheads subtracts the
    notification and announcement periods for the physically tight variant.
    """
    if l_active < 2:
        raise ValueError("optimization needs at least 2 contending devices")
    budget = params.t_frame
    if include_overheads:
        budget -= params.t_np + params.t_ap

    def slack(m: int) -> float:
        _, t_cop = min_cop_over_p(m, l_active, params, tol=tol, exact=exact)
        return budget - t_cop - m * params.t_tran

    m_hi = min(l_active - 1, int(budget // params.t_tran))
    if m_hi < 1 or slack(1) < 0.0:
        raise InfeasibleError(
            f"no admission count fits the budget of {budget} us "
            f"(l_active={l_active})")

    lo, hi = 1, m_hi  # invariant: lo feasible, hi+1 infeasible or hi == m_hi
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if slack(mid) >= 0.0:
            lo = mid
        else:
            hi = mid - 1

    p_opt, t_cop_opt = min_cop_over_p(lo, l_active, params, tol=tol,
                                      exact=exact)
    return OptResult(m_opt=lo, p_opt=p_opt, t_cop_opt=t_cop_opt,
                     c_total=lo * params.rate * params.t_tran)
