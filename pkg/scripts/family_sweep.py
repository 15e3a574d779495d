"""Sweep the two-orbit family F(lambda) and compare with the closed form.

Writes one CSV row per lambda: verdict, expected verdict, k, rho, the rho
predicted from k, and the oracle label.

    python3 scripts/family_sweep.py --count 100 --out sweep.csv
"""
from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass

from auxetica.decision import DecideOptions, Verdict, decide
from auxetica.lab import family_framework, family_ground_truth, random_family_parameters, sampling_oracle


@dataclass
class SweepConfig:
    count: int = 100
    seed: int = 0
    max_den: int = 60
    oracle_grid: int = 100_000
    out: str | None = None


def run(cfg: SweepConfig) -> list[dict]:
    rows = []
    for lam in random_family_parameters(cfg.count, cfg.seed, cfg.max_den):
        report = decide(family_framework(lam), DecideOptions(exact=True))
        truth = family_ground_truth(lam)
        k = report.invariants.k
        grid = 4096 if report.verdict is Verdict.AUXETIC else cfg.oracle_grid
        rows.append({
            "lambda": str(lam),
            "verdict": report.verdict.value,
            "expected": truth.verdict.value,
            "mu": str(truth.mu),
            "rho": float(truth.rho),
            "k": k,
            "rho_from_k": -(k * k + k + 1) / (3 * (k + 2) ** 3),
            "oracle": sampling_oracle(report.pencil, grid=grid).label,
        })
    return rows


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--count", type=int, default=SweepConfig.count)
    p.add_argument("--seed", type=int, default=SweepConfig.seed)
    p.add_argument("--max-den", type=int, default=SweepConfig.max_den)
    p.add_argument("--oracle-grid", type=int, default=SweepConfig.oracle_grid)
    p.add_argument("--out")
    a = p.parse_args(argv)
    cfg = SweepConfig(a.count, a.seed, a.max_den, a.oracle_grid, a.out)
    rows = run(cfg)
    fh = open(cfg.out, "w", newline="") if cfg.out else sys.stdout
    writer = csv.DictWriter(fh, fieldnames=list(rows[0]))
    writer.writeheader()
    writer.writerows(rows)
    if cfg.out:
        fh.close()
    agree = sum(r["verdict"] == r["expected"] for r in rows)
    oracle = sum((r["oracle"] == "FOUND_PD") == (r["verdict"] == "AUXETIC") for r in rows)
    print(f"verdict agreement {agree}/{len(rows)}, oracle agreement {oracle}/{len(rows)}", file=sys.stderr)
    return 0 if agree == oracle == len(rows) else 1


if __name__ == "__main__":
    sys.exit(main())
