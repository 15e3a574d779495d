"""Time decide on random regular frameworks of growing size.

    python3 scripts/scaling_benchmark.py --sizes 10 20 40 80
"""
from __future__ import annotations

import argparse
import math
import time
from dataclasses import dataclass, field

from auxetica.decision import DecideOptions, decide
from auxetica.deformation import build_system
from auxetica.lab import random_regular_framework
from auxetica.linalg import bareiss_echelon


@dataclass
class BenchConfig:
    sizes: list[int] = field(default_factory=lambda: [10, 20, 40])
    seed_offset: int = 0
    exact_limit: int = 80  # skip exact mode above this size


def main(argv=None) -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", type=int, nargs="+", default=BenchConfig().sizes)
    p.add_argument("--seed-offset", type=int, default=0)
    p.add_argument("--exact-limit", type=int, default=80)
    a = p.parse_args(argv)
    cfg = BenchConfig(a.sizes, a.seed_offset, a.exact_limit)
    print(f"{'n':>5} {'verdict':>12} {'exact s':>9} {'elim s':>9} {'ops':>9} {'float s':>9}")
    prev = None
    for n in cfg.sizes:
        fw = random_regular_framework(n, seed=n + cfg.seed_offset)
        t = time.perf_counter()
        rf = decide(fw, DecideOptions(exact=False))
        tf = time.perf_counter() - t
        te = elim = ops = math.nan
        if n <= cfg.exact_limit:
            t = time.perf_counter()
            r = decide(fw, DecideOptions(exact=True))
            te = time.perf_counter() - t
            elim = r.timings["elimination"]
            ops = bareiss_echelon(build_system(fw, exact=True).matrix).ops
        print(f"{n:>5} {rf.verdict.value:>12} {te:>9.3f} {elim:>9.4f} {ops:>9} {tf:>9.4f}")
        if prev and not math.isnan(elim):
            pn, pe = prev
            print(f"      elimination exponent {math.log(elim / pe) / math.log(n / pn):.2f}")
        prev = (n, elim)


if __name__ == "__main__":
    main()
