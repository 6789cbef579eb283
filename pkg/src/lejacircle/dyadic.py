"""Binary representations of positive integers and the digit-sum function."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# int64 headroom for the vectorised cumulative sum: the result is below
# N * (log2 N + 1), so N <= 2**40 leaves plenty of room.
ARRAY_N_LIMIT = 1 << 40


@dataclass(frozen=True)
class BinaryDecomposition:
    """N = 2**e[0] + 2**e[1] + ... with e strictly decreasing."""

    n_value: int
    exponents: tuple[int, ...]

    def __post_init__(self):
        if self.n_value < 1:
            raise ValueError("BinaryDecomposition needs N >= 1")
        if any(a <= b for a, b in zip(self.exponents, self.exponents[1:])):
            raise ValueError("exponents must be strictly decreasing")
        if sum(1 << e for e in self.exponents) != self.n_value:
            raise ValueError("exponents do not add up to n_value")

    @property
    def t(self) -> int:
        return len(self.exponents)

    def __iter__(self):
        return iter(self.exponents)

    def __len__(self):
        return len(self.exponents)


def _check_positive(n) -> int:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise TypeError(f"expected an integer, got {type(n).__name__}")
    n = int(n)
    if n < 1:
        raise ValueError(f"N must be >= 1, got {n}")
    return n


def decompose(n: int) -> BinaryDecomposition:
    """Set bit positions of ``n``, largest first.

    >>> decompose(13).exponents
    (3, 2, 0)
    """
    n = _check_positive(n)
    exps = tuple(b for b in range(n.bit_length() - 1, -1, -1) if (n >> b) & 1)
    return BinaryDecomposition(n, exps)


def tau(n: int) -> int:
    """Number of ones in the binary representation of ``n``."""
    return _check_positive(n).bit_count()


def tau_cumulative_fast(n: int) -> int:
    """sum_{k=1}^{n-1} tau(k) from the binary digits of ``n`` alone.

    With n = sum_i 2**e_i (e descending, i from 1) the sum equals
    sum_i (e_i + 2(i-1)) 2**(e_i - 1).  The doubled sum is evaluated first so
    that e_i = 0 never produces a half; Python integers keep it exact for any n.
    """
    n = _check_positive(n)
    twice = sum((e + 2 * i) << e for i, e in enumerate(decompose(n).exponents))
    return twice >> 1


def tau_cumulative_naive(n: int) -> int:
    """Literal summation of tau(k) for k = 1..n-1."""
    n = _check_positive(n)
    return sum(k.bit_count() for k in range(1, n))


def popcounts(n_max: int) -> np.ndarray:
    """tau(k) for k = 0..n_max by repeated bit stripping (tau(0) = 0)."""
    k = np.arange(n_max + 1, dtype=np.int64)
    out = np.zeros_like(k)
    while np.any(k):
        out += k & 1
        k >>= 1
    return out


def tau_cumulative_table(n_max: int) -> np.ndarray:
    """``table[N]`` = sum_{k=1}^{N-1} tau(k) for N = 0..n_max, by running sums."""
    if n_max > ARRAY_N_LIMIT:
        raise OverflowError(f"n_max={n_max} exceeds the int64-safe bound 2**40")
    pc = popcounts(n_max)
    table = np.zeros(n_max + 1, dtype=np.int64)
    if n_max >= 2:
        table[2:] = np.cumsum(pc[1:n_max])
    return table


def tau_cumulative_fast_array(ns) -> np.ndarray:
    """Vectorised :func:`tau_cumulative_fast` over an int64 array."""
    ns = np.asarray(ns, dtype=np.int64)
    if ns.size and (ns.min() < 1 or ns.max() > ARRAY_N_LIMIT):
        if ns.min() < 1:
            raise ValueError("all N must be >= 1")
        raise OverflowError("N above 2**40 would overflow int64 accumulation")
    twice = np.zeros_like(ns)
    seen = np.zeros_like(ns)
    top = int(ns.max()).bit_length() if ns.size else 0
    for b in range(top - 1, -1, -1):
        on = (ns >> b) & 1
        twice += on * ((b + 2 * seen) << b)
        seen += on
    return twice >> 1


def square_expansion_terms(n: int) -> tuple[list[int], list[int]]:
    """Integer coefficients rebuilding N**2 from the block sizes of N.

    Returns ``(doubled, single)`` with

        N**2 = sum_k doubled[k] * 4**(e_k + 1) + sum_k single[k] * 4**e_k,

    where doubled[k] = sum_{j>k} 2**(e_j - e_k) and single[k] =
    1 - sum_{j>k} 2**(e_j - e_k + 1).  Both are dyadic rationals; they are
    returned scaled by 2**e_k (numerators over 2**e_k) so everything stays in
    integers.  ``single`` entries may be negative.
    """
    exps = decompose(n).exponents
    doubled, single = [], []
    for k, ek in enumerate(exps):
        tail = sum(1 << ej for ej in exps[k + 1:])
        doubled.append(tail)
        single.append((1 << ek) - 2 * tail)
    return doubled, single


def square_from_expansion(n: int) -> int:
    """Evaluate the block expansion of N**2 exactly (should return n*n)."""
    exps = decompose(n).exponents
    doubled, single = square_expansion_terms(n)
    total = 0
    for ek, d, s1 in zip(exps, doubled, single):
        # d / 2**ek * 4**(ek+1) = d * 2**(ek+2); s1 / 2**ek * 4**ek = s1 * 2**ek
        total += (d << (ek + 2)) + s1 * (1 << ek)
    return total
