"""Command-line interface: optimize | simulate | sweep."""
import argparse
import json
import sys
from dataclasses import replace

from .baselines import run_baseline_scenario
from .config import ScenarioConfig, load_config
from .engine import run_scenario
from .errors import ConfigError, InfeasibleError
from .optimizer import optimize
from .sweep import AXES, sweep as run_sweep, write_csv

EXIT_OK = 0
EXIT_RUNTIME = 1   # infeasible optimization, I/O failure
EXIT_CONFIG = 2    # bad configuration or arguments


def _load(args) -> ScenarioConfig:
    cfg = load_config(args.config) if args.config else ScenarioConfig()
    if getattr(args, "seed", None) is not None:
        cfg = replace(cfg, seed=args.seed)
    if getattr(args, "include_overheads", False):
        cfg = replace(cfg, include_overheads=True)
    return cfg


def _nominal_l(cfg: ScenarioConfig) -> int:
    if cfg.activity_rule == "fixed_count":
        return int(cfg.activity_value)
    return int(round(cfg.activity_value * cfg.k_total))


def cmd_optimize(args) -> int:
    cfg = _load(args)
    l_active = args.l if args.l is not None else _nominal_l(cfg)
    if l_active < 2:
        print(f"error: optimization needs L >= 2, got L={l_active}",
              file=sys.stderr)
        return EXIT_CONFIG
    try:
        result = optimize(l_active, cfg.timing,
                          include_overheads=cfg.include_overheads,
                          exact=cfg.use_exact_cop)
    except InfeasibleError as e:
        print(f"infeasible: {e}", file=sys.stderr)
        return EXIT_RUNTIME
    print(json.dumps(result.to_dict(), sort_keys=True))
    return EXIT_OK


def cmd_simulate(args) -> int:
    cfg = _load(args)
    sink = (lambda line: print(line)) if args.trace else None
    if cfg.protocol == "hybrid":
        stats = run_scenario(cfg, trace_sink=sink)
    else:
        stats = run_baseline_scenario(cfg)
    print(json.dumps(stats.to_dict(), sort_keys=True))
    return EXIT_OK


def cmd_sweep(args) -> int:
    cfg = _load(args)
    try:
        values = [float(v) for v in args.values.split(",") if v.strip()]
    except ValueError:
        print(f"error: --values must be a comma-separated number list, "
              f"got {args.values!r}", file=sys.stderr)
        return EXIT_CONFIG
    protocols = [p.strip() for p in args.protocols.split(",") if p.strip()]
    rows = run_sweep(args.axis, values, protocols, cfg)
    try:
        write_csv(rows, args.out)
    except OSError as e:
        print(f"error: cannot write {args.out}: {e}", file=sys.stderr)
        return EXIT_RUNTIME
    failed = sum(1 for r in rows if r.error)
    print(f"wrote {len(rows)} rows to {args.out}"
          + (f" ({failed} failed cells)" if failed else ""))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="hybridmac",
        description="Hybrid contention/TDMA MAC: optimizer, simulator, "
                    "and comparative sweeps.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="TOML scenario file")
        p.add_argument("--seed", type=int, help="override the scenario seed")
        p.add_argument("--include-overheads", action="store_true",
                       help="subtract notification/announcement periods "
                            "from the optimizer budget")

    p_opt = sub.add_parser("optimize", help="solve one frame's (M, p)")
    common(p_opt)
    p_opt.add_argument("--l", type=int, default=None,
                       help="contending device count (default: from config)")
    p_opt.set_defaults(fn=cmd_optimize)

    p_sim = sub.add_parser("simulate", help="run one scenario")
    common(p_sim)
    p_sim.add_argument("--trace", action="store_true",
                       help="emit one JSON line per frame before the stats")
    p_sim.set_defaults(fn=cmd_simulate)

    p_sw = sub.add_parser("sweep", help="comparative sweep to CSV")
    common(p_sw)
    p_sw.add_argument("--axis", choices=AXES, required=True)
    p_sw.add_argument("--values", required=True,
                      help="comma-separated axis values (Tframe in us)")
    p_sw.add_argument("--protocols", default="hybrid,aloha,tdma")
    p_sw.add_argument("--out", required=True, help="output CSV path")
    p_sw.set_defaults(fn=cmd_sweep)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ConfigError as e:
        print(f"config error: {e}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
