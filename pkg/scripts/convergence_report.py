#!/usr/bin/env python3
"""Tabulate how the family closes in on the square as the exponent doubles.

For each N the report shows the measured largest distance to the limit
square, the analytic diagonal bound sqrt(2) * (1 - 2^(-1/(2N))), and the
arc length of one full circuit. The arc length climbs from 2*pi toward the
square perimeter 8 while the gap decays like log(2)/N.
"""

from __future__ import annotations

import argparse
import math
from dataclasses import dataclass

from fermatcurves import arc_length, convergence_gap


@dataclass
class ReportConfig:
    doublings: int = 11
    resolution: int = 2048
    tol: float = 1e-10


def parse_config(argv=None) -> ReportConfig:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--doublings", type=int, default=11, help="report N = 1, 2, 4, ... 2^K (default K=11)")
    parser.add_argument("--resolution", type=int, default=2048, help="angular grid for the gap (default 2048)")
    parser.add_argument("--tol", type=float, default=1e-10, help="quadrature error target")
    ns = parser.parse_args(argv)
    return ReportConfig(ns.doublings, ns.resolution, ns.tol)


def main(argv=None) -> None:
    cfg = parse_config(argv)
    print(f"{'N':>6}  {'gap to square':>15}  {'diagonal bound':>15}  {'arc length':>16}")
    for k in range(cfg.doublings + 1):
        n = 2**k
        gap = convergence_gap(n, resolution=cfg.resolution)
        bound = math.sqrt(2.0) * (1.0 - 2.0 ** (-1.0 / (2.0 * n)))
        length = arc_length(n, tol=cfg.tol)
        print(f"{n:>6}  {gap:>15.9e}  {bound:>15.9e}  {length:>16.12f}")
    print(f"{'limit':>6}  {0.0:>15.9e}  {0.0:>15.9e}  {8.0:>16.12f}")


if __name__ == "__main__":
    main()
