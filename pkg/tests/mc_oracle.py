"""Brute-force Monte-Carlo oracles, independent of the engine's sampler.

Slot outcomes are drawn one slot at a time (vectorized across rounds): a
slot with 0 attempts is idle, 1 attempt succeeds, >=2 collide. The wait for
one success among a fixed pool of n contenders is the building block; the
closed-form contention model composes per-success stages with fixed pools,
so its oracle composes the same stages.
"""
import numpy as np


def stage_wait(n: int, p: float, params, rounds: int, rng):
    """Simulate `rounds` independent waits for one success among n
    contenders. Returns (collisions, idle_slots, elapsed) arrays."""
    di, dc, ds = params.delta_idle, params.delta_coll, params.delta_succ
    coll = np.zeros(rounds, dtype=np.int64)
    idle = np.zeros(rounds, dtype=np.int64)
    elapsed = np.zeros(rounds)
    active = np.ones(rounds, dtype=bool)
    while active.any():
        idx = np.flatnonzero(active)
        k = rng.binomial(n, p, size=idx.size)
        is_idle = k == 0
        is_succ = k == 1
        elapsed[idx] += np.where(is_idle, di, np.where(is_succ, ds, dc))
        coll[idx] += k >= 2
        idle[idx] += is_idle
        active[idx[is_succ]] = False
    return coll, idle, elapsed


def stage_mean_times(pools, p: float, params, rounds: int, rng):
    """Mean wait per stage for each contender pool size in `pools`."""
    return np.array([stage_wait(n, p, params, rounds, rng)[2].mean()
                     for n in pools])


def aloha_first_success_slot(n: int, q: float, rounds: int, rng,
                             max_slots: int):
    """Slot index (1-based) of the first singleton slot among n always-backlogged
    transmitters; 0 when none occurred within max_slots."""
    out = np.zeros(rounds, dtype=np.int64)
    active = np.ones(rounds, dtype=bool)
    for t in range(1, max_slots + 1):
        idx = np.flatnonzero(active)
        if idx.size == 0:
            break
        k = rng.binomial(n, q, size=idx.size)
        hit = idx[k == 1]
        out[hit] = t
        active[hit] = False
    return out
