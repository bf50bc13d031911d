"""Measure how often fixture B's depth-2 tower breaks multiplicativity and
disagrees with the minimal-pair valuation, next to the repaired tower.

    python scripts/fixture_b_defect.py --pairs 1000 --polys 100 --seeds 3
"""

from __future__ import annotations

import argparse
import random
import time
from dataclasses import dataclass

from valchain.algebraic import minimal_pair_eval
from valchain.fixtures import get_fixture, random_polynomial


@dataclass(frozen=True)
class Config:
    pairs: int = 1000
    polys: int = 100
    max_degree: int = 8
    seed: int = 20261014
    seeds: int = 1


def run(cfg: Config):
    rows = []
    for name in ("B", "B-REPAIRED"):
        fx = get_fixture(name)
        w = fx.maclane.valuation()
        for k in range(cfg.seeds):
            rng = random.Random(cfg.seed + k)
            start = time.perf_counter()
            mult = 0
            for _ in range(cfg.pairs):
                f = random_polynomial(fx.field, rng, cfg.max_degree)
                g = random_polynomial(fx.field, rng, cfg.max_degree)
                mult += w(f * g) != w(f) + w(g)
            wbar = 0
            for _ in range(cfg.polys):
                f = random_polynomial(fx.field, rng, cfg.max_degree)
                wbar += w(f) != minimal_pair_eval(fx.theta, fx.delta, f)
            rows.append((name, cfg.seed + k, mult, wbar, time.perf_counter() - start))
    return rows


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pairs", type=int, default=Config.pairs)
    ap.add_argument("--polys", type=int, default=Config.polys)
    ap.add_argument("--max-degree", type=int, default=Config.max_degree)
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("--seeds", type=int, default=Config.seeds)
    a = ap.parse_args(argv)
    cfg = Config(a.pairs, a.polys, a.max_degree, a.seed, a.seeds)
    print(f"{'tower':<11} {'seed':>9} {'w(fg)!=w(f)+w(g)':>17} {'w!=wbar':>8} {'secs':>6}")
    for name, seed, mult, wbar, secs in run(cfg):
        print(f"{name:<11} {seed:>9} {mult:>11}/{cfg.pairs:<5} {wbar:>4}/{cfg.polys:<3} {secs:>6.1f}")


if __name__ == "__main__":
    main()
