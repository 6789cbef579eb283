"""Logarithmic and Riesz energies of circle configurations.

Three routes to the same numbers: brute-force pairwise sums, the closed form
for equally spaced points, and the binary-digit formulas for Leja sections.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import _kernels
from .dyadic import decompose, tau_cumulative_fast
from .leja import DyadicAngle, _as_angles, chord_distance
from .specfun import equilibrium_energy, regime

LN2 = math.log(2.0)


class InfiniteEnergyError(ValueError):
    """Two points of a configuration coincide."""


def kernel_value(distance: float, s: float) -> float:
    if s == 0:
        return -math.log(distance)
    return distance ** (-s)


def _check_distinct(angles: np.ndarray) -> None:
    if np.unique(angles).size != angles.size:
        raise InfiniteEnergyError("configuration has coincident points")


def pairwise_energy(points, s: float) -> float:
    """2 * sum_{i<j} k(x_i, x_j), with -log for s = 0 and |.|**-s otherwise.

    ``points`` may be a :class:`LejaSection`, a sequence of
    :class:`DyadicAngle` (distances from exact angle differences) or an array
    of half-turn angles.
    """
    if s < 0:
        raise ValueError("s must be non-negative")
    if isinstance(points, Sequence) and points and isinstance(points[0], DyadicAngle):
        pts = list(points)
        if len(pts) < 2:
            raise ValueError("need at least two points")
        if len(set(pts)) != len(pts):
            raise InfiniteEnergyError("configuration has coincident points")
        total = math.fsum(
            kernel_value(chord_distance(pts[i], pts[j]), s)
            for i in range(len(pts))
            for j in range(i + 1, len(pts))
        )
        return 2.0 * total
    angles = _as_angles(points)
    if angles.size < 2:
        raise ValueError("need at least two points")
    _check_distinct(angles)
    return float(_kernels.prefix_energies(angles, s)[-1])


def prefix_energies(points, s: float) -> np.ndarray:
    """Pairwise energy of every prefix: ``out[N]`` for N = 0..len(points)."""
    angles = _as_angles(points)
    _check_distinct(angles)
    return _kernels.prefix_energies(angles, s)


def cross_energy(a, b, s: float) -> float:
    """sum_{y in b} sum_{x in a} k(x, y)."""
    aa, bb = _as_angles(a), _as_angles(b)
    return float(_kernels.potential(aa, s, bb).sum())


def _sine_sum(n: int, s: float) -> float:
    # sum_{k=1}^{n-1} sin(k pi / n)^(-s); terms k and n-k coincide
    half = (n - 1) // 2
    k = np.arange(1, half + 1, dtype=np.float64)
    terms = np.sin(np.pi * k / n) ** (-s)
    total = 2.0 * math.fsum(terms)
    if n % 2 == 0:
        total += 1.0
    return total


def _log_n(n: int) -> float:
    # log n = e*log 2 + log(mantissa); exact multiple of log 2 when n = 2**e
    e = n.bit_length() - 1
    return e * LN2 + math.log(n / (1 << e))


def equally_spaced_energy(n: int, s: float) -> float:
    """Energy of the n-th roots of unity: -n log n for s = 0, else
    2**-s * n * sum_k sin(k pi/n)**-s.  Zero for n = 1."""
    if n < 1:
        raise ValueError("N must be >= 1")
    if s < 0:
        raise ValueError("s must be non-negative")
    if n == 1:
        return 0.0
    if s == 0:
        return -n * _log_n(n)
    if n & (n - 1) == 0:
        return _power_of_two_energy(n.bit_length() - 1, float(s))
    return 2.0 ** (-s) * n * _sine_sum(n, s)


@lru_cache(maxsize=4096)
def _power_of_two_energy(m: int, s: float) -> float:
    n = 1 << m
    if n == 1:
        return 0.0
    if s == 0:
        return -n * (m * LN2)
    return 2.0 ** (-s) * n * _sine_sum(n, s)


def warm_cache(max_n: int, s: float) -> None:
    """Populate the power-of-two energies needed for every N <= max_n."""
    for m in range(max_n.bit_length() + 1):
        _power_of_two_energy(m, float(s))


def fast_energy(n: int, s: float) -> float:
    """Energy of the first ``n`` points of a Leja sequence from the bits of n."""
    if s < 0:
        raise ValueError("s must be non-negative")
    if n < 1:
        raise ValueError("N must be >= 1")
    if s == 0:
        return -2.0 * LN2 * tau_cumulative_fast(n)
    s = float(s)
    exps = decompose(n).exponents
    parts = []
    for k, ek in enumerate(exps):
        tail = math.fsum(math.ldexp(1.0, ej - ek) for ej in exps[k + 1:])
        if tail:
            parts.append(tail * _power_of_two_energy(ek + 1, s))
        parts.append((1.0 - 2.0 * tail) * _power_of_two_energy(ek, s))
    return math.fsum(parts)


@dataclass(frozen=True)
class EnergyStat:
    n_value: int
    s: float
    energy: float
    regime: str
    normalized: float


def normalized_value(n: int, s: float, energy: float) -> float:
    r = regime(s)
    if r == "log":
        return (energy + n * _log_n(n)) / n
    if r == "subcritical":
        return (energy - equilibrium_energy(s) * n * n) / n ** (1.0 + s)
    if r == "critical":
        return (energy - n * n * _log_n(n) / math.pi) / (n * n)
    return energy / n ** (1.0 + s)


def normalized_stat(n: int, s: float, energy: float) -> EnergyStat:
    """Second-order (or first-order for s > 1) normalisation of an energy value.

    log: (E + N log N)/N;  0<s<1: (E - I_s N^2)/N^(1+s);
    s=1: (E - N^2 log N / pi)/N^2;  s>1: E/N^(1+s).
    """
    if n < 2:
        raise ValueError("N must be >= 2")
    return EnergyStat(n, float(s), float(energy), regime(s), normalized_value(n, s, energy))


def log_stat_rewrite(n: int) -> float:
    """(E_0 + N log N)/N written in the ratios 2**(e_i - e_1)."""
    if n < 2:
        raise ValueError("N must be >= 2")
    exps = decompose(n).exponents
    e1 = exps[0]
    ratios = [math.ldexp(1.0, e - e1) for e in exps]
    denom = math.fsum(ratios)
    numer = math.fsum((e1 - e + 2 - 2 * i) * r for i, (e, r) in
                      enumerate(zip(exps, ratios), start=1) if i >= 2)
    return LN2 * numer / denom + math.log(denom)


def equally_spaced_second_order(n: int, s: float) -> float:
    """Normalised value of the roots-of-unity energy (the R_s(N) sequence)."""
    return normalized_value(n, s, equally_spaced_energy(n, s))
