"""Threshold rounding of the relaxation vector and tripartition statistics.

A tripartition is encoded by z in {-1, 0, +1}^n: decided vertices carry
+-1, undecided vertices 0. Rounding at threshold t decides vertex i when
x_i^2 >= t (boundary equality is decided). The exhaustive sweep over the
n candidate thresholds derandomizes the uniform-t scheme.
"""

from dataclasses import dataclass

import numpy as np


class RoundingError(ValueError):
    pass


@dataclass
class PartitionStats:
    good: float
    bad: float
    cross: float
    inc: float


@dataclass
class ExpectedStats:
    e_good: float
    e_bad: float
    e_cross: float
    e_inc: float


def threshold_round(x, t):
    """Round x (||x||_inf = 1) at threshold t in (0, 1] to z in {-1,0,1}^n."""
    x = np.asarray(x, dtype=np.float64)
    if not (0.0 < t <= 1.0):
        raise RoundingError(f"threshold t={t} outside (0, 1]")
    s = np.sqrt(t)
    z = np.zeros(len(x), dtype=np.int8)
    z[x >= s] = 1
    z[x <= -s] = -1
    return z


def partition_stats(g, z):
    """Good/Bad/Cross/Inc weights of the tripartition z on g.

    good: red cut + blue uncut among decided pairs; bad: blue cut + red
    uncut among decided pairs; cross: exactly one endpoint undecided;
    inc = w(E) - w(edges inside the undecided set).
    """
    z = np.asarray(z)
    if z.shape != (g.n,):
        raise RoundingError(f"z length {z.shape} does not match n={g.n}")
    us, vs, ws, red = g.edge_arrays()
    zu = z[us].astype(np.float64)
    zv = z[vs].astype(np.float64)
    prod = zu * zv
    decided = (zu != 0) & (zv != 0)
    cut = decided & (prod < 0)
    uncut = decided & (prod > 0)
    good = float(np.sum(ws[(cut & red) | (uncut & ~red)]))
    bad = float(np.sum(ws[(cut & ~red) | (uncut & red)]))
    crossing = (zu != 0) ^ (zv != 0)
    cross = float(np.sum(ws[crossing]))
    inside_v0 = (zu == 0) & (zv == 0)
    inc = float(np.sum(ws[~inside_v0]))
    return PartitionStats(good=good, bad=bad, cross=cross, inc=inc)


def recoverable_ratio(stats):
    """(good + cross/2) / inc, or None when inc == 0 (undefined)."""
    if stats.inc == 0:
        return None
    return (stats.good + stats.cross / 2.0) / stats.inc


def best_tripartition(g, x):
    """Sweep all candidate thresholds t = x_i^2 and keep the best z.

    Returns (z, stats) maximizing the recoverable ratio over thresholds
    with inc > 0; ties prefer smaller t (the larger decided set). The
    vertex attaining ||x||_inf is always decided, so z != 0. If every
    threshold has inc = 0 (only possible when all incident weight is
    zero) the largest threshold is returned as-is.
    """
    x = np.asarray(x, dtype=np.float64)
    xmax = np.max(np.abs(x))
    if xmax == 0.0:
        raise RoundingError("cannot round the zero vector")
    x = x / xmax
    thresholds = np.unique(x[x != 0] ** 2)  # ascending: smaller t first
    best = None
    best_ratio = -np.inf
    for t in thresholds:
        z = threshold_round(x, t)
        stats = partition_stats(g, z)
        ratio = recoverable_ratio(stats)
        if ratio is None:
            continue
        if ratio > best_ratio:
            best_ratio = ratio
            best = (z, stats)
    if best is None:
        # all incident weight is zero at every threshold; any z works
        t = float(thresholds[-1])
        z = threshold_round(x, t)
        return z, partition_stats(g, z)
    return best


def exact_rounding_expectations(g, x):
    """Closed-form expectations of the stats under t ~ Uniform[0, 1].

    Per edge, with a = min(x_u^2, x_v^2) and b = max(x_u^2, x_v^2):
    same signs -> uncut w.p. a, crossing w.p. b - a; opposite signs ->
    cut w.p. a, crossing w.p. b - a; a zero entry -> crossing w.p. b.
    Cut contributes good for red edges and bad for blue; uncut the
    other way around.
    """
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (g.n,):
        raise RoundingError(f"vector length {x.shape} does not match n={g.n}")
    if not np.isclose(np.max(np.abs(x), initial=0.0), 1.0):
        raise RoundingError("x must have unit infinity norm")
    us, vs, ws, red = g.edge_arrays()
    xu, xv = x[us], x[vs]
    a = np.minimum(xu ** 2, xv ** 2)
    b = np.maximum(xu ** 2, xv ** 2)
    prod = xu * xv
    c_prob = np.where(prod < 0, a, 0.0)
    u_prob = np.where(prod > 0, a, 0.0)
    x_prob = b - a
    e_good = float(np.sum(ws * np.where(red, c_prob, u_prob)))
    e_bad = float(np.sum(ws * np.where(red, u_prob, c_prob)))
    e_cross = float(np.sum(ws * x_prob))
    return ExpectedStats(e_good=e_good, e_bad=e_bad, e_cross=e_cross,
                         e_inc=e_good + e_bad + e_cross)
