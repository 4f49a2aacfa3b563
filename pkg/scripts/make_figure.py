#!/usr/bin/env python3
"""Render the nested curve family for exponents 1..N as a standalone SVG.

The innermost curve is the circle; each doubling of the sampling exponent
pushes the outline closer to the square with corners (+-1, +-1).
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from pathlib import Path

from fermatcurves import AffineFrame, sample_uniform_theta
from fermatcurves.cli import emit_svg


@dataclass
class FigureConfig:
    max_exponent: int = 5
    count: int = 512
    output: Path = Path("family.svg")
    frame: AffineFrame | None = None


def parse_config(argv=None) -> FigureConfig:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-exponent", type=int, default=5, help="draw exponents 1..N (default 5)")
    parser.add_argument("--count", type=int, default=512, help="vertices per curve (default 512)")
    parser.add_argument("--output", type=Path, default=Path("family.svg"))
    parser.add_argument(
        "--frame",
        default=None,
        help="six comma-separated affine coefficients alpha,beta,gamma,delta,epsilon,zeta",
    )
    ns = parser.parse_args(argv)
    frame = None
    if ns.frame is not None:
        frame = AffineFrame(*(float(part) for part in ns.frame.split(",")))
    return FigureConfig(ns.max_exponent, ns.count, ns.output, frame)


def main(argv=None) -> None:
    cfg = parse_config(argv)
    kwargs = {} if cfg.frame is None else {"frame": cfg.frame}
    curves = [
        sample_uniform_theta(n, count=cfg.count, **kwargs)
        for n in range(1, cfg.max_exponent + 1)
    ]
    cfg.output.write_bytes(emit_svg(curves))
    print(f"wrote {cfg.output} with {len(curves)} nested curves")


if __name__ == "__main__":
    main()
