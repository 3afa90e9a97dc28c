"""Closed-form model of p-persistent contention.

Expected collision counts, idle time, and total contention-period duration,
in an exact per-success form and in a large-population asymptotic form that
is linear in the success target.
"""
import math

from .errors import DegenerateIndexError, ProbabilityDomainError, StepTooLargeError
from .timing import ContentionPoint, TimingParams


def _pow1m(p: float, k: float) -> float:
    """(1 - p)**k evaluated in log space; stable for k up to ~1e5."""
    return math.exp(k * math.log1p(-p))


def _check_point(l_active: int, i: int, p: float) -> None:
    if not 0.0 < p < 1.0:
        raise ProbabilityDomainError(f"p={p} not in (0, 1)")
    if i < 1 or i > l_active - 1:
        raise DegenerateIndexError(
            f"success index i={i} needs 1 <= i <= l_active-1 (l_active={l_active})")


def expected_collisions(l_active: int, i: int, p: float) -> float:
    """Expected number of collision periods preceding the i-th success,
    with l_active - i devices still contending for it."""
    _check_point(l_active, i, p)
    n = l_active - i
    q = _pow1m(p, n)
    return (1.0 - q) / (n * p * _pow1m(p, n - 1)) - 1.0


def expected_idle(l_active: int, i: int, p: float,
                  params: TimingParams) -> float:
    """Expected idle time preceding each busy period while waiting for the
    i-th success."""
    _check_point(l_active, i, p)
    q = _pow1m(p, l_active - i)
    return q / (1.0 - q) * params.delta_idle


def t_cop_exact(point: ContentionPoint, params: TimingParams) -> float:
    """Expected contention-period duration for m_target successes, summing
    the per-success cost over the shrinking contender pool.

    m_target = 0 returns 0 by the empty-sum convention.
    """
    total = 0.0
    for i in range(1, point.m_target + 1):
        n_coll = expected_collisions(point.l_active, i, point.p)
        idle = expected_idle(point.l_active, i, point.p, params)
        total += ((n_coll + 1.0) * idle
                  + n_coll * params.delta_coll
                  + params.delta_succ)
    return total


def cop_cost_per_success(l_active: int, p: float,
                         params: TimingParams) -> float:
    """Large-L expected cost of one success: idle wait, collisions, and the
    successful exchange, with the contender pool treated as undepleted."""
    if not 0.0 < p < 1.0:
        raise ProbabilityDomainError(f"p={p} not in (0, 1)")
    lp = l_active * p
    log_inv_q = -math.log(lp) - (l_active - 1) * math.log1p(-p)
    if log_inv_q > 700.0:  # exp would overflow; the cost is effectively inf
        return math.inf
    inv_q = math.exp(log_inv_q)
    return (params.delta_idle / lp
            + params.delta_succ
            + (inv_q - 1.0 / lp - 1.0) * params.delta_coll)


def t_cop_asymptotic(point: ContentionPoint, params: TimingParams) -> float:
    """Contention-period duration in the l_active >> m_target regime;
    exactly linear in m_target."""
    return point.m_target * cop_cost_per_success(
        point.l_active, point.p, params)


def t_cop_second_derivative_sign(point: ContentionPoint, params: TimingParams,
                                 h: float) -> int:
    """Sign of the central second difference of the asymptotic duration in p.

    Convexity of the contention cost implies this is positive everywhere in
    (0, 1); the optimizer's inner line search relies on it.
    """
    if h <= 0:
        raise StepTooLargeError("h must be positive")
    if point.p - h <= 0.0 or point.p + h >= 1.0:
        raise StepTooLargeError(
            f"step h={h} leaves (0, 1) around p={point.p}")
    m, l = point.m_target, point.l_active
    f = lambda p: t_cop_asymptotic(ContentionPoint(l, m, p), params)
    d2 = f(point.p + h) - 2.0 * f(point.p) + f(point.p - h)
    return int(d2 > 0) - int(d2 < 0)
