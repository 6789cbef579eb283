"""Gamma, zeta and the limit constants of the circle energy asymptotics."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

EULER_GAMMA = 0.57721566490153286061

# Lanczos approximation, g = 7, n = 9.
_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993227684700473478,
    676.520368121885098567009190444019,
    -1259.13921672240287047156078755283,
    771.3234287776530788486528258894,
    -176.61502916214059906584551354,
    12.507343278686904814458936853,
    -0.13857109526572011689554707,
    9.984369578019570859563e-6,
    1.50563273514931155834e-7,
)
_SQRT_2PI = math.sqrt(2.0 * math.pi)


def _lanczos(x: float) -> float:
    # valid for x >= 0.5
    x -= 1.0
    acc = _LANCZOS_COEF[0]
    for i in range(1, len(_LANCZOS_COEF)):
        acc += _LANCZOS_COEF[i] / (x + i)
    t = x + _LANCZOS_G + 0.5
    if x < 140.0:
        return _SQRT_2PI * t ** (x + 0.5) * math.exp(-t) * acc
    return math.exp(math.log(_SQRT_2PI * acc) + (x + 0.5) * math.log(t) - t)


def gamma_fn(x: float) -> float:
    """Gamma function for real x > 0."""
    x = float(x)
    if not x > 0.0:
        raise ValueError(f"gamma_fn needs x > 0, got {x}")
    if x < 0.5:
        return math.pi / (math.sin(math.pi * x) * _lanczos(1.0 - x))
    return _lanczos(x)


@lru_cache(maxsize=None)
def _borwein_weights(n: int) -> tuple[float, ...]:
    # d_k = n * sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!), exact then rounded
    d, acc = [], 0
    for i in range(n + 1):
        acc += math.factorial(n + i - 1) * 4 ** i * n // (math.factorial(n - i) * math.factorial(2 * i))
        d.append(acc)
    return tuple(float(v) for v in d)


_ETA_TERMS = 40


def eta(s: float) -> float:
    """Dirichlet eta function for real s > 0 (Borwein's accelerated series)."""
    n = _ETA_TERMS
    d = _borwein_weights(n)
    dn = d[n]
    total = 0.0
    for k in range(n):
        term = (d[k] - dn) / (k + 1.0) ** s
        total += term if k % 2 == 0 else -term
    return -total / dn


def zeta(s: float) -> float:
    """Riemann zeta on (0, 1) U (1, inf) through zeta = eta / (1 - 2**(1-s))."""
    s = float(s)
    if s == 1.0:
        raise ValueError("zeta has a pole at s = 1")
    if not s > 0.0:
        raise ValueError(f"zeta is only provided for s > 0, got {s}")
    if s > 60.0:
        # eta(s) = 1 - 2^-s + ... is 1 to double precision well before this
        return 1.0 + 2.0 ** (-s) + 3.0 ** (-s)
    return eta(s) / -math.expm1((1.0 - s) * math.log(2.0))


def equilibrium_energy(s: float) -> float:
    """Riesz s-energy of normalized arc length on the unit circle, 0 < s < 1."""
    s = float(s)
    if not 0.0 < s < 1.0:
        raise ValueError(f"continuous energy is finite only for 0 < s < 1, got {s}")
    return 2.0 ** (-s) * gamma_fn((1.0 - s) / 2.0) / (math.sqrt(math.pi) * gamma_fn(1.0 - s / 2.0))


def riesz_constant(s: float) -> float:
    """2 zeta(s) / (2 pi)**s."""
    return 2.0 * zeta(s) / (2.0 * math.pi) ** s


def critical_constant() -> float:
    """(gamma - log(pi/2)) / pi."""
    return (EULER_GAMMA - math.log(math.pi / 2.0)) / math.pi


def euler_gamma() -> float:
    return EULER_GAMMA


def regime(s: float) -> str:
    if s < 0:
        raise ValueError("s must be non-negative")
    if s == 0:
        return "log"
    if s < 1:
        return "subcritical"
    if s == 1:
        return "critical"
    return "supercritical"


@dataclass(frozen=True)
class LimitTarget:
    """liminf of the normalised energy; the limsup is known in closed form only for s = 0."""

    s: float
    liminf_value: float
    limsup_factor_required: bool
    limsup_value: float | None = None

    @property
    def regime(self) -> str:
        return regime(self.s)


def limit_constant(s: float) -> LimitTarget:
    s = float(s)
    r = regime(s)
    if r == "log":
        return LimitTarget(s, 0.0, False, math.log(4.0 / 3.0))
    if r == "critical":
        return LimitTarget(s, critical_constant(), True)
    return LimitTarget(s, riesz_constant(s), True)
