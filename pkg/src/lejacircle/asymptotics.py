"""Block-proportion vectors and the extremal constants built from them.

A vector in the family is (2**t_1, ..., 2**t_{r-1}, 1, 0, ..., 0) / M with
t_1 > ... > t_{r-1} > 0 and M = 2**t_1 + ... + 1 odd.  It is the limit of
(2**n_1/N, ..., 2**n_r/N) along N = M * 2**m, so it is determined by M alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterator

from . import _kernels
from .dyadic import decompose
from .specfun import EULER_GAMMA, riesz_constant

KINDS = ("h_lower", "h_upper", "kappa")
DEFAULT_P_MAX = 12
DEFAULT_T_MAX = 24


@dataclass(frozen=True)
class ThetaVector:
    """Exact vector of block proportions for the odd denominator ``m_value``."""

    m_value: int
    p: int = 0
    entries: tuple[Fraction, ...] = field(init=False)
    block_exponents: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        m = self.m_value
        if m < 1 or m % 2 == 0:
            raise ValueError(f"M must be a positive odd integer, got {m}")
        exps = decompose(m).exponents
        p = max(self.p, len(exps))
        ent = tuple(Fraction(1 << e, m) for e in exps) + (Fraction(0),) * (p - len(exps))
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "entries", ent)
        object.__setattr__(self, "block_exponents", exps[:-1])

    @property
    def r(self) -> int:
        """Number of nonzero entries."""
        return len(self.block_exponents) + 1

    def padded(self, p: int) -> "ThetaVector":
        return ThetaVector(self.m_value, p)

    def floats(self) -> list[float]:
        return [float(x) for x in self.entries]

    def tails(self) -> list[Fraction]:
        """sum_{j>k} theta_j for each k."""
        out, acc = [], Fraction(0)
        for x in reversed(self.entries):
            out.append(acc)
            acc += x
        return out[::-1]

    def __str__(self):
        return "(" + ", ".join(str(x) for x in self.entries) + ")"


def theta_of(n: int) -> ThetaVector:
    """(2**n_i / N)_i for the binary digits of N, reduced to the odd part of N."""
    n = int(n)
    if n < 1:
        raise ValueError("N must be >= 1")
    odd = n >> ((n & -n).bit_length() - 1)
    return ThetaVector(odd)


def enumerate_theta(p_max: int, t_max: int) -> Iterator[ThetaVector]:
    """Every vector with at most ``p_max`` nonzero entries and t_1 <= t_max.

    Yields one vector per odd M, grouped by number of entries, then ascending.
    """
    if p_max < 1 or t_max < 1:
        raise ValueError("p_max and t_max must be >= 1")
    for r in range(1, p_max + 1):
        ms = sorted(1 + sum(1 << t for t in ts)
                    for ts in combinations(range(1, t_max + 1), r - 1))
        for m in ms:
            yield ThetaVector(m)


def count_theta(p_max: int, t_max: int) -> int:
    return sum(math.comb(t_max, r - 1) for r in range(1, p_max + 1))


def h_function(theta: ThetaVector, s: float) -> float:
    """sum_k theta_k**s * (2(2**s - 1) * tail_k + theta_k); zero entries drop out."""
    if s < 0:
        raise ValueError("s must be non-negative")
    coef = 2.0 * (2.0 ** s - 1.0)
    terms = []
    for x, tail in zip(theta.entries, theta.tails()):
        if x == 0:
            continue
        fx = float(x)
        terms.append(fx ** s * (coef * float(tail) + fx))
    return math.fsum(terms)


def k_function(theta: ThetaVector) -> float:
    """2 log 2 + sum theta_k^2 log(theta_k/4) + 2 sum tail_k theta_k log theta_k."""
    terms = [2.0 * math.log(2.0)]
    for x, tail in zip(theta.entries, theta.tails()):
        if x == 0:
            continue
        fx = float(x)
        lx = math.log(fx)
        terms.append(fx * fx * (lx - 2.0 * math.log(2.0)))
        terms.append(2.0 * float(tail) * fx * lx)
    return math.fsum(terms)


@dataclass(frozen=True)
class ExtremalEstimate:
    s: float | None
    kind: str
    value: float
    witness: ThetaVector
    search_bounds: tuple[int, int]

    def evaluate_witness(self) -> float:
        if self.kind == "kappa":
            return k_function(self.witness)
        return h_function(self.witness, self.s)


def _check_kind(s, kind):
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    if kind == "h_lower" and not (s is not None and 0 < s < 1):
        raise ValueError("h_lower is defined for 0 < s < 1")
    if kind == "h_upper" and not (s is not None and s > 1):
        raise ValueError("h_upper is defined for s > 1")


def extremal_search(s: float | None, kind: str, p_max: int = DEFAULT_P_MAX,
                    t_max: int = DEFAULT_T_MAX) -> ExtremalEstimate:
    """Exhaustive min (h_lower) or max (h_upper, kappa) over the bounded family.

    The result is one-sided: an upper bound for the infimum h_lower, a lower
    bound for the suprema h_upper and kappa.  ``s`` is ignored for kappa.
    """
    _check_kind(s, kind)
    if p_max < 1 or t_max < 1:
        raise ValueError("p_max and t_max must be >= 1")
    code = KINDS.index(kind)
    value, m = _kernels.scan_theta(code, 0.0 if s is None or kind == "kappa" else s,
                                   p_max, t_max)
    witness = ThetaVector(m)
    return ExtremalEstimate(None if kind == "kappa" else float(s), kind, value,
                            witness, (p_max, t_max))


def extremal_search_brute(s, kind, p_max, t_max) -> ExtremalEstimate:
    """Same search through :func:`enumerate_theta` and the exact-entry H/K."""
    _check_kind(s, kind)
    best, wit = None, None
    for th in enumerate_theta(p_max, t_max):
        v = k_function(th) if kind == "kappa" else h_function(th, s)
        better = best is None or (v < best if kind == "h_lower" else v > best)
        if better or (v == best and th.m_value < wit.m_value):
            best, wit = v, th
    return ExtremalEstimate(None if kind == "kappa" else float(s), kind, best, wit,
                            (p_max, t_max))


def limsup_target(theta: ThetaVector, s: float) -> float:
    """Limit of the normalised energy along N = M * 2**m, m -> infinity."""
    if not s > 0:
        raise ValueError("s must be positive")
    if s == 1:
        return (EULER_GAMMA - math.log(math.pi / 2.0) + k_function(theta)) / math.pi
    return h_function(theta, s) * riesz_constant(s)


def choice_n(k: int) -> int:
    """sum_{j=0}^{k} 4**j, the family whose log statistic approaches log(4/3)."""
    return ((4 ** (k + 1)) - 1) // 3
