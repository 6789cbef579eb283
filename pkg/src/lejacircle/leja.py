"""Leja sections on the unit circle.

Points are stored exactly as dyadic multiples of pi: ``DyadicAngle(j, m)`` is
``exp(i*pi*j/2**m)``.  A section keeps all of its numerators at one common
level so set comparisons with roots of unity are integer comparisons.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import _kernels

GOLDEN_TOL = 1e-12
_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True, order=True)
class DyadicAngle:
    """The point exp(i*pi*numerator/2**level), kept in lowest terms."""

    numerator: int
    level: int

    def __post_init__(self):
        j, m = self.numerator, self.level
        if m < 0:
            raise ValueError("level must be non-negative")
        j %= 2 << m
        while m > 0 and j % 2 == 0:
            j //= 2
            m -= 1
        if j == 0:
            m = 0
        object.__setattr__(self, "numerator", j)
        object.__setattr__(self, "level", m)

    @classmethod
    def from_fraction(cls, half_turns: Fraction) -> "DyadicAngle":
        q = Fraction(half_turns)
        m = q.denominator.bit_length() - 1
        if q.denominator != 1 << m:
            raise ValueError(f"{q} is not a dyadic rational")
        return cls(q.numerator, m)

    @property
    def half_turns(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.level)

    def __float__(self) -> float:
        return math.ldexp(self.numerator, -self.level)

    def rotate(self, other: "DyadicAngle") -> "DyadicAngle":
        return DyadicAngle.from_fraction(self.half_turns + other.half_turns)

    def to_complex(self) -> complex:
        x = float(self)
        return complex(math.cos(math.pi * x), math.sin(math.pi * x))


class LejaSection:
    """Ordered points of a Leja section, as numerators over ``2**level`` half-turns."""

    __slots__ = ("_num", "_level")

    def __init__(self, numerators, level: int):
        num = np.array(numerators, dtype=np.int64)
        num.setflags(write=False)
        self._num = num
        self._level = int(level)

    @property
    def numerators(self) -> np.ndarray:
        return self._num

    @property
    def level(self) -> int:
        return self._level

    def __len__(self):
        return self._num.shape[0]

    def __getitem__(self, i):
        if isinstance(i, slice):
            return LejaSection(self._num[i], self._level)
        return DyadicAngle(int(self._num[i]), self._level)

    def __iter__(self):
        for j in self._num:
            yield DyadicAngle(int(j), self._level)

    @property
    def points(self) -> list[DyadicAngle]:
        return list(self)

    def angles(self) -> np.ndarray:
        """Half-turn angles as float64 (exact for level <= 52)."""
        return np.ldexp(self._num.astype(np.float64), -self._level)

    def as_set(self, level: int | None = None) -> frozenset[int]:
        """Numerators rescaled to ``level`` (default: own level) as a set."""
        lv = self._level if level is None else level
        if lv < self._level:
            raise ValueError("cannot rescale to a coarser level")
        return frozenset(int(j) << (lv - self._level) for j in self._num)

    def __repr__(self):
        return f"LejaSection(N={len(self)}, level={self._level})"


def _level_for(n: int) -> int:
    # 2**L points need angles j / 2**(L-1); keep one extra bit for safety at N=1
    return max(1, (n - 1).bit_length())


def canonical_section(n: int) -> LejaSection:
    """First ``n`` points with a_0 = 1 and a_{2^k+m} = a_m * exp(i*pi/2^k).

    In half-turns a_k is sum_b bit_b(k) / 2**b, so at level L the numerator of
    a_k is the L-bit reversal of k shifted by one.
    """
    if n < 1:
        raise ValueError("N must be >= 1")
    level = _level_for(n)
    k = np.arange(n, dtype=np.int64)
    num = np.zeros(n, dtype=np.int64)
    for b in range(level + 1):
        num += ((k >> b) & 1) << (level - b)
    return LejaSection(num, level)


def randomized_section(n: int, seed: int) -> LejaSection:
    """A Leja section with random rotations at every doubling step.

    alpha_{2^{k+1}} = (alpha_{2^k}, rho * beta_{2^k}) where rho is drawn
    uniformly from the 2**k roots of -1 and beta is an independently
    randomised 2**k-section.
    """
    if n < 1:
        raise ValueError("N must be >= 1")
    level = _level_for(n)
    rng = np.random.default_rng(seed)
    full = 1 << (level + 1)

    def build(k: int) -> np.ndarray:
        # section of size 2**k, numerators at `level`
        if k == 0:
            return np.zeros(1, dtype=np.int64)
        first = build(k - 1)
        second = build(k - 1)
        half = k - 1
        q = int(rng.integers(0, 1 << half))
        # rho = exp(i*pi*(2q+1)/2**half)
        shift = (2 * q + 1) << (level - half)
        return np.concatenate([first, (second + shift) % full])

    size = (n - 1).bit_length()
    return LejaSection(build(size)[:n], level)


def chord_distance(a: DyadicAngle, b: DyadicAngle) -> float:
    """|a - b| = 2|sin(pi*delta/2)| with delta reduced exactly to [0, 1]."""
    delta = (a.half_turns - b.half_turns) % 2
    if delta > 1:
        delta = 2 - delta
    return 2.0 * math.sin(0.5 * math.pi * float(delta))


def _as_angles(points) -> np.ndarray:
    if isinstance(points, LejaSection):
        return points.angles()
    pts = list(points) if not isinstance(points, np.ndarray) else points
    if len(pts) and isinstance(pts[0], DyadicAngle):
        return np.array([float(p) for p in pts], dtype=np.float64)
    return np.asarray(pts, dtype=np.float64) % 2.0


def _golden_min(f, a: float, b: float, tol: float) -> tuple[float, float]:
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    fx = f(x)
    for y, fy in ((c, fc), (d, fd)):
        if fy < fx:
            x, fx = y, fy
    return x, fx


def greedy_oracle_extend(points, s: float, grid: int) -> float:
    """Next greedy point (half-turns in [0, 2)) for the Riesz/log kernel.

    The potential is sampled at ``grid`` equally spaced angles; every sampled
    local minimum is refined by golden-section search inside the gap between
    the two neighbouring existing points (the potential is convex there).
    Among refined minima that tie to 1e-9 relative, the smallest angle wins.
    """
    pts = _as_angles(points)
    if pts.size == 0:
        raise ValueError("need at least one existing point")
    if s < 0:
        raise ValueError("s must be non-negative")
    if grid < 4 * pts.size:
        raise ValueError(f"grid={grid} is below 4 * {pts.size} points")
    if np.unique(pts).size != pts.size:
        raise ValueError("existing points are not distinct")

    xs = 2.0 * np.arange(grid) / grid
    u = _kernels.potential(pts, s, xs)
    finite = np.isfinite(u)
    if not finite.any():
        raise ValueError("every grid angle collides with an existing point")

    srt = np.sort(pts)
    left_nb = np.roll(u, 1)
    right_nb = np.roll(u, -1)
    cand = np.flatnonzero(finite & (u <= left_nb) & (u <= right_nb))
    if cand.size == 0:
        cand = np.array([int(np.argmin(np.where(finite, u, np.inf)))])

    def f(x):
        return float(_kernels.potential(pts, s, np.array([x % 2.0]))[0])

    results = []
    for g in cand:
        x0 = xs[g]
        # gap of existing points around x0, on the unrolled circle
        i = np.searchsorted(srt, x0, side="right")
        lo = srt[i - 1] if i > 0 else srt[-1] - 2.0
        hi = srt[i] if i < srt.size else srt[0] + 2.0
        a = max(lo, x0 - 2.0 / grid)
        b = min(hi, x0 + 2.0 / grid)
        x, fx = _golden_min(f, a, b, GOLDEN_TOL)
        # near the minimum f is flat to round-off; keep an exact grid hit
        if u[g] <= fx + 4e-16 * max(1.0, abs(fx)):
            x, fx = x0, float(u[g])
        results.append((fx, x % 2.0))

    best = min(r[0] for r in results)
    tie = 1e-9 * max(1.0, abs(best))
    winners = [x for fx, x in results if fx <= best + tie]
    x = min(winners)
    return 0.0 if x >= 2.0 else x


def potential_at(points, s: float, x: float) -> float:
    """Discrete potential sum_i k(x, p_i) at one angle (half-turns)."""
    return float(_kernels.potential(_as_angles(points), s, np.array([x]))[0])


def log_product_at(points, x: float) -> float:
    """prod_i |exp(i*pi*x) - p_i|, via the log potential."""
    return math.exp(-potential_at(points, 0.0, x))


def empirical_distribution(section: LejaSection | Sequence[DyadicAngle], bins: int) -> list[int]:
    """Point counts in the arcs [2b/bins, 2(b+1)/bins) half-turns, b = 0..bins-1."""
    if bins < 1:
        raise ValueError("bins must be >= 1")
    if not isinstance(section, LejaSection):
        pts = list(section)
        level = max((p.level for p in pts), default=0)
        section = LejaSection([p.numerator << (level - p.level) for p in pts], level)
    # half-open arcs: bin = floor(j * bins / 2**(level+1)), exact in integers
    idx = (section.numerators.astype(object) * bins) // (1 << (section.level + 1))
    counts = [0] * bins
    for b in idx:
        counts[int(b)] += 1
    return counts


def roots_of_unity_set(n_pow: int, level: int) -> frozenset[int]:
    """Numerators (at ``level``) of the 2**n_pow-th roots of unity."""
    step = 1 << (level + 1 - n_pow)
    return frozenset(range(0, 1 << (level + 1), step))


def is_distinct(points: Iterable[DyadicAngle]) -> bool:
    pts = list(points)
    return len(set(pts)) == len(pts)
