"""The graph of the exponentiation map as a point set in Z_p x Z_{p-1}.

The set {(g**x mod p, x) : x in Z_{p-1}} is a Sidon set: every nonzero
element of the product group arises as a difference of two points at
most once.  This module verifies that by exhaustive difference counting,
measures the difference-set cardinality (which must be
(p-1)**2 - (p-1) + 1), evaluates additive characters of the product
group against the point set, and computes the incomplete exponential
sums that control box equidistribution.

Exponents here live in {0, ..., p-2}.  The companion permutation module
uses {1, ..., p-1}; the two never exchange raw exponents, only values
reduced mod p-1 (residue 0 corresponds to p-1 there).  Points are
ordered (group element, exponent), i.e. the Z_p coordinate first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .numth import GroupParams

__all__ = [
    "SidonGraph",
    "CharacterIndex",
    "SidonCheck",
    "build_graph",
    "point_set",
    "verify_sidon",
    "difference_set_size",
    "character_sum",
    "max_nontrivial_character_sum",
    "incomplete_exponential_sum_total",
    "incomplete_exponential_sum_profile",
    "polya_vinogradov_bound",
    "sidon_character_bound",
]

Point = tuple[int, int]


@dataclass(frozen=True, eq=False)
class SidonGraph:
    """A point set in Z_p x Z_{p-1}, held as parallel coordinate arrays.

    Genuine graphs from `build_graph` contain exactly the p-1 points
    (g**x, x) for x = 0..p-2; `point_set` wraps arbitrary collections so
    that the failure path of `verify_sidon` can be exercised (g is 0 for
    those).
    """

    p: int
    g: int
    first: np.ndarray  # Z_p coordinates
    second: np.ndarray  # Z_{p-1} coordinates

    @property
    def d(self) -> int:
        """Order of the second factor, p - 1."""
        return self.p - 1

    @property
    def size(self) -> int:
        return len(self.first)

    @property
    def points(self) -> list[Point]:
        return [(int(u), int(v)) for u, v in zip(self.first, self.second)]


def build_graph(params: GroupParams) -> SidonGraph:
    """The p-1 points (g**x, x), x ascending from 0, first coordinates
    computed incrementally from g**0 = 1."""
    p, g, d = params.p, params.g, params.d
    first = np.empty(d, dtype=np.int64)
    acc = 1
    for x in range(d):
        first[x] = acc
        acc = acc * g % p
    return SidonGraph(p=p, g=g, first=first, second=np.arange(d, dtype=np.int64))


def point_set(p: int, points: list[Point]) -> SidonGraph:
    """Wrap an arbitrary list of distinct points of Z_p x Z_{p-1}.

    Intended for tests: graphs from `build_graph` never fail
    `verify_sidon`, so synthetic sets are the only way to see a witness.
    """
    if p < 3:
        raise ValueError(f"ambient group needs p >= 3, got {p}")
    if len(set(points)) != len(points):
        raise ValueError("points must be distinct")
    d = p - 1
    for u, v in points:
        if not (0 <= u < p and 0 <= v < d):
            raise ValueError(f"point ({u}, {v}) outside Z_{p} x Z_{d}")
    arr = np.asarray(points, dtype=np.int64).reshape(len(points), 2)
    return SidonGraph(p=p, g=0, first=arr[:, 0].copy(), second=arr[:, 1].copy())


@dataclass(frozen=True)
class SidonCheck:
    """Outcome of the exhaustive difference count.

    On failure, `witness` holds two distinct ordered point pairs
    ((a, b), (c, d)) with a - b = c - d != 0 componentwise mod
    (p, p-1).
    """

    ok: bool
    witness: tuple[tuple[Point, Point], tuple[Point, Point]] | None = None


def _difference_codes(graph: SidonGraph) -> np.ndarray:
    """All ordered pairwise differences, encoded as u*(p-1) + v."""
    p, d = graph.p, graph.d
    du = (graph.first[:, None] - graph.first[None, :]) % p
    dv = (graph.second[:, None] - graph.second[None, :]) % d
    return (du * d + dv).ravel()


def verify_sidon(graph: SidonGraph) -> SidonCheck:
    """Count, for every nonzero difference, the ordered point pairs
    realizing it; the set is Sidon iff every count is at most one.

    Exhaustive over all size**2 ordered pairs (the zero difference,
    realized exactly `size` times on the diagonal, is exempt).  On
    failure the reported witness is the smallest colliding difference in
    (u, v) lexicographic order.
    """
    codes = _difference_codes(graph)
    values, counts = np.unique(codes, return_counts=True)
    bad = (values != 0) & (counts > 1)
    if not bad.any():
        return SidonCheck(ok=True)
    code = int(values[np.argmax(bad)])
    u, v = divmod(code, graph.d)
    pairs = _pairs_with_difference(graph, u, v, limit=2)
    return SidonCheck(ok=False, witness=(pairs[0], pairs[1]))


def _pairs_with_difference(
    graph: SidonGraph, u: int, v: int, limit: int
) -> list[tuple[Point, Point]]:
    p, d = graph.p, graph.d
    pts = graph.points
    found = []
    for a in pts:
        for b in pts:
            if a == b:
                continue
            if (a[0] - b[0]) % p == u and (a[1] - b[1]) % d == v:
                found.append((a, b))
                if len(found) == limit:
                    return found
    return found


def difference_set_size(graph: SidonGraph) -> int:
    """Cardinality of {a - b : a, b in the set}, zero difference included.

    For a genuine exponentiation graph this equals
    (p-1)**2 - (p-1) + 1.
    """
    return len(np.unique(_difference_codes(graph)))


@dataclass(frozen=True)
class CharacterIndex:
    """Index (s, t) of the additive character
    (x, y) -> exp(2*pi*i*(s*x/p + t*y/(p-1))) of Z_p x Z_{p-1}.

    The character is trivial iff s = 0 and t = 0.
    """

    s: int
    t: int

    @property
    def is_trivial(self) -> bool:
        return self.s == 0 and self.t == 0


def _roots_of_unity(n: int) -> np.ndarray:
    return np.exp(2j * np.pi * np.arange(n) / n)


def character_sum(graph: SidonGraph, chi: CharacterIndex) -> float:
    """|sum over points of exp(2*pi*i*(s*x/p + t*y/(p-1)))|.

    Phases are reduced to exact integer indices into root-of-unity
    tables before exponentiation, so no precision is lost to large
    arguments.
    """
    p, d = graph.p, graph.d
    if not (0 <= chi.s < p and 0 <= chi.t < d):
        raise ValueError(f"character index ({chi.s}, {chi.t}) outside [0,{p}) x [0,{d})")
    wp = _roots_of_unity(p)
    wd = _roots_of_unity(d)
    terms = wp[(chi.s * graph.first) % p] * wd[(chi.t * graph.second) % d]
    return float(abs(terms.sum()))


def max_nontrivial_character_sum(graph: SidonGraph) -> tuple[float, CharacterIndex]:
    """Largest character-sum magnitude over all p*(p-1) - 1 nontrivial
    characters, with its index.

    All magnitudes are obtained at once as the 2-D discrete Fourier
    transform of the point set's indicator array on the Z_p x Z_{p-1}
    grid; entry (s, t) of the transform is the conjugate of the
    character sum, so the magnitudes are identical.  Exact ties resolve
    to the smallest (s, then t), the first index in row-major scan
    order.
    """
    p, d = graph.p, graph.d
    indicator = np.zeros((p, d))
    indicator[graph.first, graph.second] = 1.0
    magnitudes = np.abs(np.fft.fft2(indicator))
    magnitudes[0, 0] = -1.0  # exclude the trivial character
    s, t = divmod(int(np.argmax(magnitudes)), d)
    return float(magnitudes[s, t]), CharacterIndex(s, t)


def incomplete_exponential_sum_total(n: int, N: int, h: int) -> float:
    """sum over a in [0, n) of |sum over the window x in [h, h+N) of
    exp(2*pi*i*a*x/n)|.

    The window length N must satisfy 1 <= N < n; the start h may be any
    integer (only x mod n matters).
    """
    _check_window(n, N)
    w = _roots_of_unity(n)
    a = np.arange(n, dtype=np.int64)
    x = (h + np.arange(N, dtype=np.int64)) % n
    inner = w[(a[:, None] * x[None, :]) % n].sum(axis=1)
    return float(np.abs(inner).sum())


def incomplete_exponential_sum_profile(n: int, h: int) -> np.ndarray:
    """The totals for every window length at once: entry N-1 equals
    incomplete_exponential_sum_total(n, N, h) for N = 1..n-1.

    Computed by accumulating the window sums column by column, an
    independent route from the direct per-N evaluation.
    """
    _check_window(n, 1)
    w = _roots_of_unity(n)
    a = np.arange(n, dtype=np.int64)
    x = (h + np.arange(n - 1, dtype=np.int64)) % n
    partial = np.cumsum(w[(a[:, None] * x[None, :]) % n], axis=1)
    return np.abs(partial).sum(axis=0)


def _check_window(n: int, N: int) -> None:
    if n < 2:
        raise ValueError(f"modulus must be >= 2, got {n}")
    if not 1 <= N < n:
        raise ValueError(f"window length must satisfy 1 <= N < n, got N={N}, n={n}")


def polya_vinogradov_bound(n: int) -> float:
    """The bound 5 * n * ln(n) the totals stay under."""
    return 5.0 * n * math.log(n)


def sidon_character_bound(p: int) -> float:
    """The bound sqrt(3*(p-1)) every nontrivial character sum of a
    genuine graph stays under."""
    return math.sqrt(3.0 * (p - 1))
