"""Invariant checks over all modules, as used by ``lejacircle verify``."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import asymptotics as asy
from .dyadic import square_from_expansion, tau_cumulative_fast_array, tau_cumulative_table
from .energy import (equally_spaced_energy, fast_energy, log_stat_rewrite,
                     normalized_value, pairwise_energy, prefix_energies, warm_cache)
from .leja import (canonical_section, greedy_oracle_extend, log_product_at, potential_at,
                   randomized_section, roots_of_unity_set)
from .specfun import gamma_fn, zeta

REL_TOL = 1e-10
LOG43 = math.log(4.0 / 3.0)


@dataclass
class CheckResult:
    name: str
    passed: bool
    max_error: float
    detail: str = ""

    def line(self) -> str:
        flag = "PASS" if self.passed else "FAIL"
        return f"[{flag}] {self.name:<28} max_err={self.max_error:.3e}  {self.detail}"


def rel_err(a: float, b: float) -> float:
    return abs(a - b) / max(abs(b), 1e-300)


def check_tau_lemma(max_n: int) -> CheckResult:
    ns = np.arange(1, max_n + 1, dtype=np.int64)
    naive = tau_cumulative_table(max_n)[1:]
    fast = tau_cumulative_fast_array(ns)
    bad = int(np.count_nonzero(fast != naive))
    return CheckResult("tau cumulative lemma", bad == 0, float(bad), f"N<={max_n}")


def check_square_expansion(max_n: int) -> CheckResult:
    bad = sum(1 for n in range(1, max_n + 1) if square_from_expansion(n) != n * n)
    return CheckResult("N^2 block expansion", bad == 0, float(bad), f"N<={max_n}")


def check_prefix_property(max_n: int) -> CheckResult:
    sec = canonical_section(max_n)
    bad = 0
    n = 0
    while (1 << n) <= max_n:
        if sec[: 1 << n].as_set() != roots_of_unity_set(n, sec.level):
            bad += 1
        n += 1
    return CheckResult("power-of-two prefixes", bad == 0, float(bad), f"N={max_n}")


def check_oracle_equivalence(max_n: int, s_list, seeds: int) -> CheckResult:
    worst = 0.0
    sections = [canonical_section(max_n)] + [randomized_section(max_n, k) for k in range(seeds)]
    for s in s_list:
        warm_cache(max_n, s)
        fast = np.array([fast_energy(n, s) for n in range(2, max_n + 1)])
        for sec in sections:
            brute = prefix_energies(sec, s)[2:]
            err = np.max(np.abs(fast - brute) / np.abs(brute))
            worst = max(worst, float(err))
    return CheckResult("fast vs pairwise energy", worst < REL_TOL, worst,
                       f"N<={max_n}, s={list(s_list)}, {len(sections)} sections")


def check_log_bounds(max_n: int) -> CheckResult:
    worst_hi, bad = -math.inf, 0
    for n in range(2, max_n + 1):
        v = normalized_value(n, 0.0, fast_energy(n, 0.0))
        if n & (n - 1) == 0:
            bad += v != 0.0
        elif not (0.0 <= v < LOG43):
            bad += 1
        worst_hi = max(worst_hi, v)
    return CheckResult("log stat in [0, log 4/3)", bad == 0, LOG43 - worst_hi,
                       f"max={worst_hi:.10f}")


def check_log_rewrite(max_n: int) -> CheckResult:
    worst = max((abs(log_stat_rewrite(n) - normalized_value(n, 0.0, fast_energy(n, 0.0)))
                 for n in range(2, max_n + 1)), default=0.0)
    return CheckResult("log stat rewrite", worst < 1e-12, worst)


def check_halving(max_n: int) -> CheckResult:
    worst = 0.0
    for n in range(2, max_n + 1):
        a = normalized_value(n, 0.0, fast_energy(n, 0.0))
        b = normalized_value(2 * n, 0.0, fast_energy(2 * n, 0.0))
        worst = max(worst, abs(a - b))
    return CheckResult("log stat at N equals at 2N", worst < 1e-12, worst)


def check_domination(max_n: int, s_list) -> CheckResult:
    worst = 0.0
    for s in s_list:
        if s == 0:
            continue
        for n in range(2, max_n + 1):
            e, lo = fast_energy(n, s), equally_spaced_energy(n, s)
            worst = max(worst, (lo - e) / abs(lo))
    return CheckResult("E_s >= L_s", worst <= 1e-12, max(worst, 0.0))


def check_greedy_oracle(max_k: int, s_list, grid: int = 4096) -> CheckResult:
    worst = 0.0
    sec = canonical_section(max_k + 1)
    for s in sorted(set([0.0] + [float(x) for x in s_list])):
        for k in range(1, max_k + 1):
            pts = sec[:k]
            x = greedy_oracle_extend(pts, s, grid)
            if s == 0:
                got = log_product_at(pts, x)
                want = 2.0 ** bin(k).count("1")
            else:
                got = potential_at(pts, s, x)
                want = potential_at(pts, s, float(sec[k]))
            worst = max(worst, rel_err(got, want))
    return CheckResult("greedy oracle vs structure", worst < 1e-6, worst, f"k<={max_k}")


def check_special_functions() -> CheckResult:
    rng = random.Random(0)
    worst = rel_err(zeta(2.0), math.pi ** 2 / 6.0)
    for _ in range(100):
        x = rng.uniform(0.1, 20.0)
        worst = max(worst, rel_err(gamma_fn(x + 1.0), x * gamma_fn(x)))
    return CheckResult("zeta(2), gamma recursion", worst < 1e-11, worst)


def check_h_normalization(count: int = 1000) -> CheckResult:
    worst = 0.0
    for i, th in enumerate(asy.enumerate_theta(12, 24)):
        if i >= count:
            break
        worst = max(worst, abs(asy.h_function(th, 0.0) - 1.0), abs(asy.h_function(th, 1.0) - 1.0))
    return CheckResult("H(theta;0)=H(theta;1)=1", worst < 1e-12, worst)


def run_checks(max_n: int, s_list, seeds: int,
               progress: Callable[[CheckResult], None] | None = None) -> list[CheckResult]:
    if max_n < 4:
        raise ValueError("max_n must be >= 4")
    s_list = [float(s) for s in s_list]
    oracle_k = min(64, max_n - 1)
    checks = [
        lambda: check_tau_lemma(max_n),
        lambda: check_square_expansion(max_n),
        lambda: check_prefix_property(max_n),
        lambda: check_oracle_equivalence(max_n, s_list, seeds),
        lambda: check_log_bounds(max_n),
        lambda: check_log_rewrite(max_n),
        lambda: check_halving(max_n),
        lambda: check_domination(max_n, s_list),
        lambda: check_greedy_oracle(oracle_k, [s for s in s_list if s > 0]),
        check_special_functions,
        check_h_normalization,
    ]
    out = []
    for c in checks:
        r = c()
        out.append(r)
        if progress:
            progress(r)
    return out
