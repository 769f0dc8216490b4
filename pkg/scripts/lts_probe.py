"""Random Lie-triple-system probes over several seeds.

Counts are consistency evidence for the index values, not proofs of
minimality.

    python scripts/lts_probe.py --algebras A1 A2 G2 --codims 1 2 --trials 200 --seeds 0 1 2
"""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field

from lieindex.chevalley import compact
from lieindex.lts import search_lts


@dataclass
class ProbeConfig:
    algebras: list[str] = field(default_factory=lambda: ["A1", "A2"])
    codims: list[int] = field(default_factory=lambda: [1, 2])
    trials: int = 1000
    seeds: list[int] = field(default_factory=lambda: [0])


def run(cfg: ProbeConfig) -> list[dict]:
    rows = []
    for name in cfg.algebras:
        L = compact(name[0].upper(), int(name[1:]))
        for codim in cfg.codims:
            if not 0 < codim < L.dimension:
                continue
            for seed in cfg.seeds:
                t0 = time.perf_counter()
                rep = search_lts(L, codim, cfg.trials, seed)
                rows.append({"algebra": L.name, "codim": codim, "seed": seed,
                             "successes": rep.successes, "trials": rep.trials,
                             "seconds": round(time.perf_counter() - t0, 2)})
    return rows


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--algebras", nargs="+", default=ProbeConfig().algebras)
    p.add_argument("--codims", nargs="+", type=int, default=ProbeConfig().codims)
    p.add_argument("--trials", type=int, default=ProbeConfig.trials)
    p.add_argument("--seeds", nargs="+", type=int, default=ProbeConfig().seeds)
    a = p.parse_args()
    print("| algebra | codim | seed | successes | seconds |\n|---|---|---|---|---|")
    for r in run(ProbeConfig(a.algebras, a.codims, a.trials, a.seeds)):
        print(f"| {r['algebra']} | {r['codim']} | {r['seed']} | "
              f"{r['successes']}/{r['trials']} | {r['seconds']} |")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
