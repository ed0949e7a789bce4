# SPDX-License-Identifier: Apache-2.0
"""Seeded generator for the bundled demo and benchmark scenarios.

Run from the repo root:  python3 scripts/gen_scenarios.py
"""

import json
import pathlib

import numpy as np

OUT = pathlib.Path(__file__).resolve().parent.parent / "scenarios"

ENV = {"f_res_ghz": 6.0, "chi": 0.4, "gamma_ghz": 0.1}
ANT = {"f_res_ghz": 5.0, "chi": 0.5, "gamma_ghz": 0.3}
RIS = {"chi": 0.35, "gamma_ghz": 0.05, "f_res_state0_ghz": 4.8, "f_res_state1_ghz": 5.4}


def dipole(x, y, kind):
    return {"x": round(float(x), 6), "y": round(float(y), 6), **kind}


def wall(x0, y0, x1, y1, n):
    ts = np.linspace(0.0, 1.0, n)
    return [(x0 + t * (x1 - x0), y0 + t * (y1 - y0)) for t in ts]


def demo_scenario():
    rng = np.random.default_rng(20240817)
    # 1 m x 1 m enclosure, open along part of the top wall; ~3 cm spacing
    pts = []
    pts += wall(0.0, 0.0, 1.0, 0.0, 34)        # bottom
    pts += wall(1.0, 0.03, 1.0, 0.97, 32)      # right
    pts += wall(0.0, 0.03, 0.0, 0.97, 32)      # left
    pts += wall(0.06, 1.0, 0.66, 1.0, 22)      # top, partially open
    env = [dipole(x + rng.normal(0, 1e-3), y + rng.normal(0, 1e-3), ENV) for x, y in pts]

    ris = [dipole(0.97, 0.25 + 0.03 * k, RIS) for k in range(16)]
    tx = [dipole(0.20, 0.30, ANT), dipole(0.20, 0.36, ANT)]
    rx = [dipole(0.70, 0.72, ANT), dipole(0.70, 0.78, ANT)]

    return {
        "freq_grid": {"start_ghz": 4.9, "stop_ghz": 5.1, "n_points": 5},
        "tx": tx,
        "rx": rx,
        "ris": ris,
        "env": env,
        "dynamic_env": [],
    }


def bench_scenario(n_env=1000):
    rng = np.random.default_rng(7)
    pts = []
    # random fill of a 2 m x 2 m region with a protected zone for the antennas
    while len(pts) < n_env:
        x, y = rng.uniform(0.0, 2.0, size=2)
        if 0.55 < x < 1.45 and 0.55 < y < 1.45:
            continue
        if all((x - px) ** 2 + (y - py) ** 2 > 0.025**2 for px, py in pts):
            pts.append((x, y))
    env = [dipole(x, y, ENV) for x, y in pts]
    ris = [dipole(0.70 + 0.03 * k, 0.70, RIS) for k in range(16)]
    tx = [dipole(0.80, 1.20, ANT), dipole(0.86, 1.20, ANT)]
    rx = [dipole(1.20, 0.90, ANT), dipole(1.20, 0.96, ANT)]
    return {
        "freq_grid": {"start_ghz": 5.0, "stop_ghz": 5.0, "n_points": 1},
        "tx": tx,
        "rx": rx,
        "ris": ris,
        "env": env,
        "dynamic_env": [],
    }


def demo_trajectory():
    rng = np.random.default_rng(3)
    pts = [(0.70, 0.72)]  # start at the rx[0] home position
    for _ in range(19):
        pts.append((0.45 + rng.uniform(0, 0.3), 0.45 + rng.uniform(0, 0.3)))
    return pts


def main():
    OUT.mkdir(exist_ok=True)
    (OUT / "demo.json").write_text(json.dumps(demo_scenario(), indent=2) + "\n")
    (OUT / "bench_large.json").write_text(json.dumps(bench_scenario(), indent=2) + "\n")
    with open(OUT / "demo_trajectory.csv", "w") as f:
        f.write("# x,y positions for rx:0\n")
        for x, y in demo_trajectory():
            f.write(f"{x:.6f},{y:.6f}\n")
    print("wrote", sorted(p.name for p in OUT.iterdir()))


if __name__ == "__main__":
    main()
