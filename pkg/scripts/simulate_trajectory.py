"""Follow an auxetic trajectory of F(lambda) and report drift and Gram eigenvalues.

    python3 scripts/simulate_trajectory.py --lam 1/6 --tau 1e-3 --steps 50
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from auxetica.decision import simulate_path
from auxetica.lab import family_framework


@dataclass
class SimConfig:
    lam: Fraction = Fraction(1, 6)
    tau: float = 1e-3
    steps: int = 50


def main(argv=None) -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--lam", type=Fraction, default=SimConfig.lam)
    p.add_argument("--tau", type=float, default=SimConfig.tau)
    p.add_argument("--steps", type=int, default=SimConfig.steps)
    a = p.parse_args(argv)
    cfg = SimConfig(a.lam, a.tau, a.steps)
    fw = family_framework(cfg.lam)
    for tau, steps in ((cfg.tau, cfg.steps), (cfg.tau / 2, 2 * cfg.steps)):
        traj = simulate_path(fw, step=tau, steps=steps)
        pred = max(pt.predictor_drift for pt in traj.points)
        ev0 = np.linalg.eigvalsh(traj.points[0].framework.gram.to_numpy())
        ev1 = np.linalg.eigvalsh(traj.points[-1].framework.gram.to_numpy())
        print(f"tau={tau:g} steps={len(traj) - 1}: max drift {traj.max_drift:.3e}, "
              f"predictor drift {pred:.3e}, Gram eigenvalues {np.round(ev0, 6)} -> {np.round(ev1, 6)}"
              + (f", stopped: {traj.stop_reason}" if traj.stop_reason else ""))


if __name__ == "__main__":
    main()
