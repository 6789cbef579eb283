"""Point sequences on the circle for the conjecture probe (angles in half-turns)."""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .leja import canonical_section

FAMILIES = ("greedy", "vdc", "random", "custom-file")


def van_der_corput(n: int) -> np.ndarray:
    """Base-2 radical inverse of k = 0..n-1 as a fraction of the full turn."""
    k = np.arange(n, dtype=np.int64)
    x = np.zeros(n)
    scale = 1.0
    while np.any(k):
        scale *= 0.5
        x += (k & 1) * scale
        k >>= 1
    return 2.0 * x


def read_angles(path) -> np.ndarray:
    """One half-turn angle per line; blank lines and ``#`` comments skipped."""
    vals = []
    for line in Path(path).read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            vals.append(float(line.split(",")[0]))
    return np.asarray(vals, dtype=np.float64) % 2.0


def family_angles(family: str, n: int, seed: int = 0, path=None) -> np.ndarray:
    if family == "greedy":
        return canonical_section(n).angles()
    if family == "vdc":
        return van_der_corput(n)
    if family == "random":
        return np.random.default_rng(seed).uniform(0.0, 2.0, size=n)
    if family == "custom-file":
        if path is None:
            raise ValueError("custom-file family needs an input path")
        ang = read_angles(path)
        if ang.size < n:
            raise ValueError(f"{path} holds {ang.size} points, {n} requested")
        ang = ang[:n]
        if np.unique(ang).size != ang.size:
            raise ValueError(f"{path} contains coincident points")
        return ang
    raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")
