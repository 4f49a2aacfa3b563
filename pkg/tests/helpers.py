"""Shared helpers for the test suite: seeded random affine frames."""

from __future__ import annotations

import random

from fermatcurves import AffineFrame


def random_frame(
    rng: random.Random,
    lo: float = -10.0,
    hi: float = 10.0,
    min_det: float = 0.1,
) -> AffineFrame:
    """Draw frame coefficients uniformly until the determinant clears min_det."""
    while True:
        vals = [rng.uniform(lo, hi) for _ in range(6)]
        if abs(vals[0] * vals[4] - vals[1] * vals[3]) >= min_det:
            return AffineFrame(*vals)


def frame_family(
    seed: int,
    count: int,
    lo: float = -10.0,
    hi: float = 10.0,
    min_det: float = 0.1,
) -> list[AffineFrame]:
    rng = random.Random(seed)
    return [random_frame(rng, lo, hi, min_det) for _ in range(count)]
