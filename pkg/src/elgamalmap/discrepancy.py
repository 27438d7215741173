"""Box counting against the exponentiation graph.

For a box B, the number of graph points inside should be close to
#B / p; every deviation |#(S cap B) - #B/p| observed here is measured
against the bound 50 * sqrt(p) * ln(p)**2.  Boxes are products of two
cyclic integer windows and may wrap around either modulus.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .sidon import SidonGraph

__all__ = [
    "Box",
    "BoxRecord",
    "DiscrepancyReport",
    "count_in_box",
    "theorem_bound",
    "sweep",
]


@dataclass(frozen=True)
class Box:
    """The window {h+1, ..., h+N} x {k+1, ..., k+M}, each factor reduced
    modulo its group order (p and p-1 respectively), so windows may
    wrap.  N and M are the window lengths; cardinality is N*M."""

    h: int
    N: int
    k: int
    M: int

    def __post_init__(self) -> None:
        if self.N < 1 or self.M < 1:
            raise ValueError("window lengths must be >= 1")

    @property
    def cardinality(self) -> int:
        return self.N * self.M


def count_in_box(graph: SidonGraph, box: Box) -> int:
    """Number of graph points inside the box.

    Walks the M exponents of the second window as one or two contiguous
    slices of the power table and tests the first coordinate by the
    cyclic-interval criterion (value - h - 1) mod p < N, so the cost is
    O(M).
    """
    p, d = graph.p, graph.d
    if box.N > p or box.M > d:
        raise ValueError(f"box {box} exceeds the {p} x {d} grid")
    start = (box.k + 1) % d
    if start + box.M <= d:
        values = graph.first[start : start + box.M]
    else:
        values = np.concatenate([graph.first[start:], graph.first[: start + box.M - d]])
    return int(np.count_nonzero((values - box.h - 1) % p < box.N))


def theorem_bound(p: int) -> float:
    """50 * sqrt(p) * ln(p)**2, the deviation bound for every box."""
    if p < 3:
        raise ValueError(f"p must be an odd prime, got {p}")
    return 50.0 * math.sqrt(p) * math.log(p) ** 2


@dataclass(frozen=True)
class BoxRecord:
    """One box measurement.  `ratio` is deviation / (sqrt(p) * ln(p)**2),
    so the bound holds iff ratio <= 50.  `large_box` flags boxes whose
    cardinality exceeds p**1.5 * ln(p)**2, the size regime where the
    relative deviation is expected to shrink."""

    box: Box
    hits: int
    expected: float
    deviation: float
    ratio: float
    large_box: bool


@dataclass(frozen=True)
class DiscrepancyReport:
    """All box measurements of one sweep, plus their maxima."""

    p: int
    g: int
    records: tuple[BoxRecord, ...]
    max_deviation: float
    max_ratio: float


def _measure(graph: SidonGraph, box: Box, scale: float, size_threshold: float) -> BoxRecord:
    hits = count_in_box(graph, box)
    expected = box.cardinality / graph.p
    deviation = abs(hits - expected)
    return BoxRecord(
        box=box,
        hits=hits,
        expected=expected,
        deviation=deviation,
        ratio=deviation / scale,
        large_box=box.cardinality > size_threshold,
    )


def sweep(graph: SidonGraph, num_random_boxes: int, seed: int) -> DiscrepancyReport:
    """Measure a deterministic family of boxes: the full box, single-row
    and single-column boxes (all of them for p <= 101, else a seeded
    sample of p-1 of each kind), and `num_random_boxes` boxes with
    uniformly drawn position and size.

    Reporting only; nothing is asserted.  The record order is the
    generation order and depends only on the seed.
    """
    if num_random_boxes < 0:
        raise ValueError("num_random_boxes must be >= 0")
    p, d = graph.p, graph.d
    rng = np.random.default_rng(seed)
    scale = math.sqrt(p) * math.log(p) ** 2
    size_threshold = p**1.5 * math.log(p) ** 2

    boxes = [Box(h=0, N=p, k=0, M=d)]
    if p <= 101:
        rows = range(p)
        cols = range(d)
    else:
        rows = sorted(int(v) for v in rng.choice(p, size=d, replace=False))
        cols = sorted(int(v) for v in rng.choice(d, size=d, replace=False))
    boxes.extend(Box(h=h, N=1, k=0, M=d) for h in rows)
    boxes.extend(Box(h=0, N=p, k=k, M=1) for k in cols)
    for _ in range(num_random_boxes):
        boxes.append(
            Box(
                h=int(rng.integers(0, p)),
                N=int(rng.integers(1, p + 1)),
                k=int(rng.integers(0, d)),
                M=int(rng.integers(1, d + 1)),
            )
        )

    records = tuple(_measure(graph, box, scale, size_threshold) for box in boxes)
    return DiscrepancyReport(
        p=p,
        g=graph.g,
        records=records,
        max_deviation=max(r.deviation for r in records),
        max_ratio=max(r.ratio for r in records),
    )
