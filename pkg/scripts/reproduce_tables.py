"""Regenerate verification reports for every table and the soundness suite.

    python scripts/reproduce_tables.py --out results --rank-ceiling 8
"""
from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from lieindex import verify
from lieindex.cli import build_report, render_markdown


@dataclass
class ReproConfig:
    out: Path = Path("results")
    rank_ceiling: int = 8
    heavy: bool = False
    scopes: tuple[str, ...] = ("table1", "table2", "table3", "table4", "soundness")


def run(cfg: ReproConfig) -> bool:
    cfg.out.mkdir(parents=True, exist_ok=True)
    ok = True
    for scope in cfg.scopes:
        t0 = time.perf_counter()
        results = verify.run_scope(scope, cfg.rank_ceiling, cfg.heavy)
        inv = {"script": "reproduce_tables", "scope": scope, **asdict(cfg)}
        inv["out"] = str(cfg.out)
        rep = build_report(inv, results)
        (cfg.out / f"{scope}.json").write_text(json.dumps(rep, indent=2) + "\n")
        (cfg.out / f"{scope}.md").write_text(render_markdown(rep))
        ok &= rep["overall"] == "pass"
        print(f"{scope:10s} {rep['overall']:4s} {time.perf_counter() - t0:6.1f}s")
    return ok


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out", type=Path, default=ReproConfig.out)
    p.add_argument("--rank-ceiling", type=int, default=ReproConfig.rank_ceiling)
    p.add_argument("--heavy", action="store_true")
    a = p.parse_args()
    return 0 if run(ReproConfig(a.out, a.rank_ceiling, a.heavy)) else 1


if __name__ == "__main__":
    raise SystemExit(main())
