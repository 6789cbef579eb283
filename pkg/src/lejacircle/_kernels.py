"""Hot numeric loops, each in two flavours.

Every kernel exists as a numba ``@njit`` loop (``*_nb``) and as a vectorised
numpy routine (``*_np``).  The public dispatchers pick one at call time:
numba is used when it imports and ``LEJACIRCLE_PURE_NUMPY`` is unset (or
``0``).  Both paths must agree to round-off; tests and
``benchmarks/bench_kernels.py`` exercise them side by side.

Angles are float64 half-turns (the point ``exp(i*pi*x)``).  Dyadic angles of
level <= 52 are exact in this representation, so differences are exact too.
"""

from __future__ import annotations

import math
import os

import numpy as np

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAVE_NUMBA = False

ENV_FLAG = "LEJACIRCLE_PURE_NUMPY"

LN2 = math.log(2.0)


def _flag_set() -> bool:
    return os.environ.get(ENV_FLAG, "").strip().lower() not in ("", "0", "false", "no")


USE_NUMBA = HAVE_NUMBA and not _flag_set()


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"


def _jit(fn):
    if HAVE_NUMBA:
        return numba.njit(cache=True, fastmath=False)(fn)
    return fn


# ---------------------------------------------------------------------------
# kernel values
# ---------------------------------------------------------------------------

@_jit
def _kernel_nb(x, y, s):
    d = abs(x - y)
    if d >= 2.0:
        d = d % 2.0
    if d > 1.0:
        d = 2.0 - d
    chord = 2.0 * math.sin(0.5 * math.pi * d)
    if s == 0.0:
        return -math.log(chord)
    return chord ** (-s)


def _kernel_np(x, y, s):
    d = np.abs(np.asarray(x, dtype=np.float64) - y) % 2.0
    d = np.where(d > 1.0, 2.0 - d, d)
    chord = 2.0 * np.sin(0.5 * np.pi * d)
    with np.errstate(divide="ignore"):
        if s == 0.0:
            return -np.log(chord)
        return chord ** (-s)


# ---------------------------------------------------------------------------
# energies of every prefix of an ordered configuration
# ---------------------------------------------------------------------------

@_jit
def _prefix_energies_nb(angles, s):
    n = angles.shape[0]
    out = np.zeros(n + 1)
    acc = 0.0
    for j in range(1, n):
        cross = 0.0
        aj = angles[j]
        for i in range(j):
            cross += _kernel_nb(aj, angles[i], s)
        acc += 2.0 * cross
        out[j + 1] = acc
    return out


def _prefix_energies_np(angles, s):
    n = angles.shape[0]
    cross = np.zeros(n + 1)
    for j in range(1, n):
        cross[j + 1] = 2.0 * _kernel_np(angles[:j], angles[j], s).sum()
    return np.cumsum(cross)


def prefix_energies(angles, s: float) -> np.ndarray:
    """``out[N]`` is the pairwise energy of ``angles[:N]`` (0 for N < 2)."""
    angles = np.ascontiguousarray(angles, dtype=np.float64)
    if USE_NUMBA:
        return _prefix_energies_nb(angles, float(s))
    return _prefix_energies_np(angles, float(s))


# ---------------------------------------------------------------------------
# discrete potential of a point set, sampled at many angles
# ---------------------------------------------------------------------------

@_jit
def _potential_nb(points, s, where):
    out = np.empty(where.shape[0])
    for g in range(where.shape[0]):
        u = 0.0
        x = where[g]
        for i in range(points.shape[0]):
            u += _kernel_nb(x, points[i], s)
        out[g] = u
    return out


def _potential_np(points, s, where, chunk=1 << 16):
    out = np.empty(where.shape[0])
    for lo in range(0, where.shape[0], chunk):
        w = where[lo:lo + chunk, None]
        out[lo:lo + chunk] = _kernel_np(w, points[None, :], s).sum(axis=1)
    return out


def potential(points, s: float, where) -> np.ndarray:
    """U(x) = sum_i k(x, points[i]) for every x in ``where``; +inf on collisions."""
    points = np.ascontiguousarray(points, dtype=np.float64)
    where = np.ascontiguousarray(np.atleast_1d(where), dtype=np.float64)
    if USE_NUMBA:
        with np.errstate(divide="ignore"):
            return _potential_nb(points, float(s), where)
    return _potential_np(points, float(s), where)


# ---------------------------------------------------------------------------
# exhaustive scan of the dyadic-block vectors (H and K extrema)
#
# A vector is indexed by an odd M = 2*mask + 1.  Its nonzero entries are
# 2^b / M over the set bits b of M (descending), and the tail mass after the
# entry at bit b is (M mod 2^b) / M.
# ---------------------------------------------------------------------------

@_jit
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@_jit
def _h_of_odd(m, s, pow2s, coef):
    # sum over bits b of (2^b/M)^s * (coef * low_b/M + 2^b/M)
    total = 0.0
    b = 0
    x = m
    fm = float(m)
    while x:
        if x & 1:
            low = m & ((1 << b) - 1)
            total += pow2s[b] * (coef * low + float(1 << b))
        x >>= 1
        b += 1
    return total * fm ** (-(1.0 + s))


@_jit
def _k_of_odd(m):
    fm = float(m)
    logm = math.log(fm)
    sq = 0.0
    cross = 0.0
    b = 0
    x = m
    ln2 = math.log(2.0)
    while x:
        if x & 1:
            th = float(1 << b) / fm
            lth = b * ln2 - logm
            sq += th * th * (lth - 2.0 * ln2)
            low = m & ((1 << b) - 1)
            cross += (float(low) / fm) * th * lth
        x >>= 1
        b += 1
    return 2.0 * ln2 + sq + 2.0 * cross


@_jit
def _scan_nb(kind, s, p_max, t_max):
    # kind: 0 = minimise H, 1 = maximise H, 2 = maximise K
    pow2s = np.empty(t_max + 2)
    for b in range(t_max + 2):
        pow2s[b] = 2.0 ** (b * s)
    coef = 2.0 * (2.0 ** s - 1.0)
    best_m = 1
    if kind == 2:
        best = _k_of_odd(1)
    else:
        best = _h_of_odd(1, s, pow2s, coef)
    for mask in range(1, 1 << t_max):
        if _popcount(mask) > p_max - 1:
            continue
        m = 2 * mask + 1
        if kind == 2:
            v = _k_of_odd(m)
        else:
            v = _h_of_odd(m, s, pow2s, coef)
        if (kind == 0 and v < best) or (kind != 0 and v > best):
            best = v
            best_m = m
    return best, best_m


def _popcount_np(x):
    c = np.zeros_like(x)
    while np.any(x):
        c += x & 1
        x = x >> 1
    return c


def _scan_np(kind, s, p_max, t_max, chunk=1 << 20):
    coef = 2.0 * (2.0 ** s - 1.0)
    best_m = 1
    best = None
    for lo in range(0, 1 << t_max, chunk):
        mask = np.arange(lo, min(lo + chunk, 1 << t_max), dtype=np.int64)
        mask = mask[_popcount_np(mask.copy()) <= p_max - 1]
        if mask.size == 0:
            continue
        m = 2 * mask + 1
        fm = m.astype(np.float64)
        acc = np.zeros(m.shape[0])
        if kind == 2:
            logm = np.log(fm)
            sq = np.zeros_like(acc)
        for b in range(t_max + 1):
            on = ((m >> b) & 1).astype(bool)
            if not on.any():
                continue
            low = (m & ((1 << b) - 1)).astype(np.float64)
            if kind == 2:
                th = np.where(on, (1 << b) / fm, 0.0)
                lth = b * LN2 - logm
                sq += th * th * (lth - 2.0 * LN2)
                acc += (low / fm) * th * lth
            else:
                acc += np.where(on, 2.0 ** (b * s) * (coef * low + (1 << b)), 0.0)
        if kind == 2:
            vals = 2.0 * LN2 + sq + 2.0 * acc
        else:
            vals = acc * fm ** (-(1.0 + s))
        i = int(np.argmin(vals)) if kind == 0 else int(np.argmax(vals))
        v = float(vals[i])
        if best is None or (kind == 0 and v < best) or (kind != 0 and v > best):
            best, best_m = v, int(m[i])
    return best, best_m


def scan_theta(kind: int, s: float, p_max: int, t_max: int) -> tuple[float, int]:
    """Best value and its odd denominator over all block vectors within bounds.

    Ties keep the smallest M.
    """
    if t_max > 60:
        raise OverflowError("t_max beyond 60 does not fit the int64 bit masks")
    if USE_NUMBA:
        v, m = _scan_nb(int(kind), float(s), int(p_max), int(t_max))
        return float(v), int(m)
    return _scan_np(int(kind), float(s), int(p_max), int(t_max))
