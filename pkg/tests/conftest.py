"""Shared test helpers."""

import numpy as np

from morpion.geometry import Direction, Segment
from morpion.linecover import Layout


def two_direction_layout(rng, d1, d2, k, alpha=5):
    """Valid random layout with exactly 5k+1 lines in each of d1 and d2.

    Lines within a direction get distinct lattice-line keys, which makes
    same-direction disjointness automatic; offsets along each line are free.
    """
    n = 5 * k + 1
    segments = []
    for d in (d1, d2):
        keys = rng.choice(np.arange(-30, 31), size=n, replace=False)
        for key in keys:
            off = int(rng.integers(-30, 31))
            if d == Direction.E:
                seg = Segment(d, (off, int(key)), alpha)
            elif d == Direction.N:
                seg = Segment(d, (int(key), off), alpha)
            elif d == Direction.NE:
                seg = Segment(d, (off, off - int(key)), alpha)
            else:
                seg = Segment(d, (off, int(key) - off), alpha)
            segments.append(seg)
    return Layout.from_segments(segments, alpha)
