import pytest

from hybridmac import (
    FrameTrace,
    OptResult,
    SimStats,
    analytic_delay,
    frame_delay,
    optimize,
    utility,
)


def make_trace(m, cop, params):
    return FrameTrace(frame_index=0, l_active=100, m_success=m,
                      cop_elapsed=cop, top_elapsed=m * params.t_tran,
                      stop_reason="m_threshold", n_idle_slots=0,
                      n_collisions=0)


def test_utility_empty_frame(params):
    assert utility(make_trace(0, 0.0, params), params) == 0.0


def test_utility_full_slate(params):
    # 46 grants of 1 ms in a 50 ms frame
    trace = make_trace(46, 3000.0, params)
    assert utility(trace, params) == pytest.approx(0.92)
    assert utility(trace, params) <= 1.0


def test_frame_delay_no_delivery_is_frame_length(params):
    assert frame_delay(make_trace(0, 0.0, params), params) == params.t_frame


def test_frame_delay_single_winner(params):
    trace = make_trace(1, 100.0, params)
    expect = params.t_np + 100.0 + params.t_ap + params.t_tran
    assert frame_delay(trace, params) == pytest.approx(expect)


def test_frame_delay_averages_slot_positions(params):
    # winners finish at slots 1..m; mean is the midpoint (m+1)/2
    trace = make_trace(4, 200.0, params)
    finishes = [params.t_np + 200.0 + params.t_ap + j * params.t_tran
                for j in (1, 2, 3, 4)]
    assert frame_delay(trace, params) == pytest.approx(
        sum(finishes) / len(finishes))


def test_analytic_delay_at_default_optimum(params):
    opt = optimize(100, params)
    d = analytic_delay(opt, params)
    # overheads + ~3.07 ms contention + about half the remaining frame
    assert d == pytest.approx(27_000.0, rel=0.01)
    assert d < params.t_frame


def test_analytic_delay_single_admission(params):
    opt = OptResult(m_opt=1, p_opt=0.5, t_cop_opt=100.0, c_total=0.0)
    expect = params.t_np + 100.0 + params.t_ap + params.t_tran
    assert analytic_delay(opt, params) == pytest.approx(expect)


def test_analytic_delay_rejects_empty(params):
    with pytest.raises(ValueError):
        analytic_delay(OptResult(0, 0.5, 0.0, 0.0), params)


def test_throughput_identity(params):
    # per-frame bits are grant count times the slot's bit budget
    opt = optimize(100, params)
    assert opt.c_total == opt.m_opt * params.rate * params.t_tran


def test_simstats_round_trip():
    s = SimStats(frames=10, mean_throughput=1.5, utility=0.4,
                 mean_delay=123.0, infeasible_frames=1)
    assert SimStats.from_dict(s.to_dict()) == s
