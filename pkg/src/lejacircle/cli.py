"""Command-line entry point: ``lejacircle {verify,sweep,constants,conjecture,oracle,hcurve}``.

Exit codes: 0 success, 1 failed check, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import sys
import time
from contextlib import contextmanager
from fractions import Fraction

import numpy as np

from . import _kernels
from . import asymptotics as asy
from .dyadic import tau
from .energy import fast_energy, log_stat_rewrite, normalized_value, prefix_energies, warm_cache
from .leja import canonical_section, greedy_oracle_extend, log_product_at, potential_at
from .sequences import FAMILIES, family_angles
from .specfun import limit_constant, regime
from .verify import run_checks

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
SWEEP_HEADER = ["N", "tau", "s", "energy", "normalized"]


class UsageError(Exception):
    pass


def fmt(x: float) -> str:
    return format(float(x), ".17g")


@contextmanager
def _open_out(path):
    if path is None or path == "-":
        yield sys.stdout
        return
    try:
        fh = open(path, "w", newline="")
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}") from exc
    with fh:
        yield fh


def _write_rows(path, header, rows) -> None:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    with _open_out(path) as fh:
        fh.write(buf.getvalue())


def sweep_rows(s: float, max_n: int):
    """(N, tau, s, energy, normalized) for N = 2..max_n from the binary formulas."""
    warm_cache(2 * max_n, s)
    for n in range(2, max_n + 1):
        e = fast_energy(n, s)
        yield n, tau(n), s, e, normalized_value(n, s, e)


def cmd_verify(args) -> int:
    if args.max_n < 4:
        raise UsageError("--max-n must be >= 4 for verify")
    t0 = time.perf_counter()
    print(f"lejacircle verify: max_n={args.max_n} s={args.s} seeds={args.seeds} "
          f"backend={_kernels.backend()}")
    results = run_checks(args.max_n, args.s, args.seeds, progress=lambda r: print(r.line(), flush=True))
    ok = all(r.passed for r in results)
    print(f"{sum(r.passed for r in results)}/{len(results)} checks passed "
          f"in {time.perf_counter() - t0:.1f}s")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_sweep(args) -> int:
    s = _single_s(args)
    if args.max_n < 2:
        raise UsageError("--max-n must be >= 2")
    rows = [(n, t, fmt(ss), fmt(e), fmt(v)) for n, t, ss, e, v in sweep_rows(s, args.max_n)]
    _write_rows(args.out, SWEEP_HEADER, rows)
    return EXIT_OK


def cmd_constants(args) -> int:
    s = _single_s(args)
    target = limit_constant(s)
    r = regime(s)
    print(f"s = {s:g} ({r})")
    print(f"liminf target        {target.liminf_value:.12f}")
    if r == "log":
        k = 8
        n = asy.choice_n(k)
        print(f"limsup target        {target.limsup_value:.12f}  (log(4/3))")
        print(f"witness family       N = (4^(k+1)-1)/3; k={k}, N={n}, "
              f"value={log_stat_rewrite(n):.12f}")
        return EXIT_OK
    kind = {"subcritical": "h_lower", "supercritical": "h_upper", "critical": "kappa"}[r]
    t0 = time.perf_counter()
    est = asy.extremal_search(None if kind == "kappa" else s, kind, args.p_max, args.t_max)
    dt = time.perf_counter() - t0
    if kind == "kappa":
        composite = (target.liminf_value * math.pi + est.value) / math.pi
        bound = "lower bound for kappa"
        limsup_bound = "lower bound"
    else:
        composite = est.value * target.liminf_value
        bound = "upper bound for h_lower" if kind == "h_lower" else "lower bound for h_upper"
        limsup_bound = "lower bound"
    print(f"{kind:<20} {est.value:.12f}  ({bound}; p_max={args.p_max}, t_max={args.t_max}, "
          f"{dt:.2f}s, backend={_kernels.backend()})")
    print(f"witness M            {est.witness.m_value}")
    print(f"witness theta        {est.witness}")
    print(f"limsup target        {composite:.12f}  ({limsup_bound} on the limsup)")
    return EXIT_OK


def cmd_conjecture(args) -> int:
    s = _single_s(args)
    if args.max_n < 2:
        raise UsageError("--max-n must be >= 2")
    try:
        ang = family_angles(args.family, args.max_n, args.seed, args.input)
    except (ValueError, OSError) as exc:
        raise UsageError(str(exc)) from exc
    if np.unique(ang).size != ang.size:
        raise UsageError("generated points are not pairwise distinct")
    energies = prefix_energies(ang, s)
    rows, running = [], -math.inf
    for n in range(2, args.max_n + 1):
        v = normalized_value(n, s, energies[n])
        running = max(running, v)
        rows.append((n, tau(n), fmt(s), fmt(energies[n]), fmt(v), fmt(running)))
    _write_rows(args.out, SWEEP_HEADER + ["running_max"], rows)
    print(f"{args.family} s={s:g} N<={args.max_n}: running max {running:.10f}, "
          f"greedy liminf target {limit_constant(s).liminf_value:.10f}", file=sys.stderr)
    return EXIT_OK


def cmd_oracle(args) -> int:
    s = _single_s(args)
    n = args.max_n
    if n < 1 or n > 256:
        raise UsageError("oracle needs 1 <= n <= 256")
    if args.grid <= 4 * n:
        raise UsageError(f"--grid must exceed 4n = {4 * n}")
    canon = canonical_section(n + 1)
    pts = [0.0]
    worst = 0.0
    print(f"{'k':>4} {'angle':>20} {'value':>22} {'predicted':>22} {'rel_dev':>10}")
    for k in range(1, n + 1):
        x = greedy_oracle_extend(np.array(pts), s, args.grid)
        if s == 0:
            got = log_product_at(np.array(pts), x)
            want = 2.0 ** tau(k)
        else:
            got = potential_at(np.array(pts), s, x)
            want = potential_at(canon[:k], s, float(canon[k]))
        dev = abs(got - want) / abs(want)
        worst = max(worst, dev)
        print(f"{k:>4} {x:>20.15f} {got:>22.15g} {want:>22.15g} {dev:>10.2e}")
        pts.append(x)
    ok = worst < 1e-6
    print(f"max relative deviation {worst:.3e} -> {'PASS' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_FAIL


DEFAULT_HCURVE = ("16/21,4/21,1/21", "4/5,1/5", "2/3,1/3")


def cmd_hcurve(args) -> int:
    thetas = []
    for spec in args.theta or DEFAULT_HCURVE:
        try:
            ent = [Fraction(x) for x in spec.split(",")]
            th = asy.ThetaVector(max(x.denominator for x in ent))
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"bad --theta {spec!r}: {exc}") from exc
        if list(th.entries) != ent:
            raise UsageError(f"{spec} is not a dyadic block vector")
        thetas.append((spec, th))
    grid = np.linspace(0.0, args.s_max, args.points)
    header = ["s"] + [f"H[{spec}]" for spec, _ in thetas]
    rows = [[fmt(s)] + [fmt(asy.h_function(th, float(s))) for _, th in thetas] for s in grid]
    _write_rows(args.out, header, rows)
    return EXIT_OK


def _single_s(args) -> float:
    if len(args.s) != 1:
        raise UsageError("this command takes exactly one --s value")
    s = float(args.s[0])
    if s < 0 or not math.isfinite(s):
        raise UsageError("--s must be a finite non-negative number")
    return s


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lejacircle",
                                description="Energies of greedy (Leja) sequences on the unit circle.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the invariant suites")
    v.add_argument("--max-n", type=int, default=2048)
    v.add_argument("--s", type=float, nargs="+", default=[0.0, 0.5, 1.0, 2.0])
    v.add_argument("--seeds", type=int, default=3, help="number of randomized sections")
    v.set_defaults(func=cmd_verify)

    sw = sub.add_parser("sweep", help="normalised energies for N = 2..max_n as CSV")
    sw.add_argument("--s", type=float, nargs=1, required=True)
    sw.add_argument("--max-n", type=int, default=4200)
    sw.add_argument("--out", default=None)
    sw.set_defaults(func=cmd_sweep)

    c = sub.add_parser("constants", help="liminf target and extremal-constant estimate")
    c.add_argument("--s", type=float, nargs=1, required=True)
    c.add_argument("--p-max", type=int, default=asy.DEFAULT_P_MAX)
    c.add_argument("--t-max", type=int, default=asy.DEFAULT_T_MAX)
    c.set_defaults(func=cmd_constants)

    cj = sub.add_parser("conjecture", help="normalised energies of another sequence family")
    cj.add_argument("--family", choices=FAMILIES, default="greedy")
    cj.add_argument("--s", type=float, nargs=1, required=True)
    cj.add_argument("--max-n", type=int, default=2048)
    cj.add_argument("--seed", type=int, default=0)
    cj.add_argument("--input", default=None, help="angle file for --family custom-file")
    cj.add_argument("--out", default=None)
    cj.set_defaults(func=cmd_conjecture)

    o = sub.add_parser("oracle", help="grow a greedy sequence numerically")
    o.add_argument("--max-n", "-n", type=int, default=8)
    o.add_argument("--s", type=float, nargs=1, default=[0.0])
    o.add_argument("--grid", type=int, default=16384)
    o.set_defaults(func=cmd_oracle)

    h = sub.add_parser("hcurve", help="H(theta; s) curves over s as CSV")
    h.add_argument("--theta", action="append", help="comma-separated fractions, repeatable")
    h.add_argument("--s-max", type=float, default=4.0)
    h.add_argument("--points", type=int, default=401)
    h.add_argument("--out", default=None)
    h.set_defaults(func=cmd_hcurve)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"lejacircle: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
