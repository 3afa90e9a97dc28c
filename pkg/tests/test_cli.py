import csv
import json

import pytest

from hybridmac import OptResult
from hybridmac.cli import EXIT_CONFIG, EXIT_OK, EXIT_RUNTIME, main

FULL_TIMING = """\
[timing]
t_frame = 50000.0
t_np = 10.2
t_ap = 10.2
t_tran = 1000.0
t_req = 22.2
t_ack = 7.5
sifs = 2.5
bifs = 7.5
delta_idle = 10.0
rate = 1728.0
"""


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_optimize_default_scenario(capsys):
    # default profile: 150 contenders out of 500 in a 50 ms frame
    code, out, err = run_cli(capsys, "optimize")
    assert code == EXIT_OK
    result = OptResult.from_dict(json.loads(out))
    assert result.m_opt == 46
    assert 0 < result.p_opt < 1


def test_optimize_explicit_l(capsys):
    code, out, _ = run_cli(capsys, "optimize", "--l", "100")
    assert code == EXIT_OK
    assert json.loads(out)["m_opt"] == 46


def test_optimize_rejects_tiny_l(capsys):
    code, out, err = run_cli(capsys, "optimize", "--l", "1")
    assert code == EXIT_CONFIG
    assert out == ""
    assert "L >= 2" in err


def test_optimize_infeasible_frame(capsys, tmp_path):
    cfg = tmp_path / "c.toml"
    cfg.write_text(FULL_TIMING.replace("t_frame = 50000.0",
                                       "t_frame = 1021.0"))
    code, out, err = run_cli(capsys, "optimize", "--config", str(cfg),
                             "--l", "100")
    assert code == EXIT_RUNTIME
    assert "infeasible" in err


def test_config_missing_timing_field(capsys, tmp_path):
    cfg = tmp_path / "c.toml"
    cfg.write_text(FULL_TIMING.replace("bifs = 7.5\n", ""))
    code, out, err = run_cli(capsys, "optimize", "--config", str(cfg))
    assert code == EXIT_CONFIG
    assert "bifs" in err


def test_config_unknown_scenario_field(capsys, tmp_path):
    cfg = tmp_path / "c.toml"
    cfg.write_text("[scenario]\nbogus = 1\n")
    code, _, err = run_cli(capsys, "simulate", "--config", str(cfg))
    assert code == EXIT_CONFIG
    assert "bogus" in err


def test_simulate_repeatable_output(capsys, tmp_path):
    cfg = tmp_path / "c.toml"
    cfg.write_text("[scenario]\nframes = 20\nk_total = 100\n"
                   "activity_value = 0.3\n")
    outs = []
    for _ in range(2):
        code, out, _ = run_cli(capsys, "simulate", "--config", str(cfg),
                               "--trace", "--seed", "77")
        assert code == EXIT_OK
        outs.append(out)
    assert outs[0] == outs[1]
    lines = outs[0].strip().splitlines()
    assert len(lines) == 21  # 20 trace lines + stats
    stats = json.loads(lines[-1])
    assert stats["frames"] == 20


def test_simulate_seed_changes_hybrid_output(capsys, tmp_path):
    cfg = tmp_path / "c.toml"
    cfg.write_text("[scenario]\nframes = 20\nk_total = 100\n"
                   "activity_value = 0.3\n")
    _, a, _ = run_cli(capsys, "simulate", "--config", str(cfg), "--seed", "1")
    _, b, _ = run_cli(capsys, "simulate", "--config", str(cfg), "--seed", "2")
    assert a != b


def test_simulate_tdma_seed_invariant(capsys, tmp_path):
    cfg = tmp_path / "c.toml"
    cfg.write_text("[scenario]\nprotocol = \"tdma\"\nframes = 10\n")
    _, a, _ = run_cli(capsys, "simulate", "--config", str(cfg), "--seed", "1")
    _, b, _ = run_cli(capsys, "simulate", "--config", str(cfg), "--seed", "2")
    assert a == b


def test_sweep_writes_csv(capsys, tmp_path):
    out_path = tmp_path / "out.csv"
    code, out, _ = run_cli(capsys, "sweep", "--axis", "K",
                           "--values", "100,200",
                           "--protocols", "hybrid,tdma",
                           "--out", str(out_path), "--seed", "5")
    assert code == EXIT_OK
    assert "4 rows" in out
    with open(out_path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 4
    by = {(r["protocol"], r["value"]): float(r["mean_throughput"])
          for r in rows}
    for k in ("100", "200"):
        assert by[("hybrid", k)] >= by[("tdma", k)]


def test_sweep_bad_values(capsys, tmp_path):
    code, _, err = run_cli(capsys, "sweep", "--axis", "K",
                           "--values", "100,abc",
                           "--out", str(tmp_path / "x.csv"))
    assert code == EXIT_CONFIG
    assert "comma-separated" in err


def test_sweep_unwritable_out(capsys, tmp_path):
    code, _, err = run_cli(capsys, "sweep", "--axis", "K", "--values", "100",
                           "--protocols", "tdma",
                           "--out", str(tmp_path / "no" / "dir" / "x.csv"))
    assert code == EXIT_RUNTIME
    assert "cannot write" in err


def test_missing_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
