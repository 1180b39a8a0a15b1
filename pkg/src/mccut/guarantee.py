"""Approximation-guarantee analysis curves.

The per-level recoverable-ratio bound f(eps) is piecewise: below the
crossover eps0 it comes from the stationary mixing weight beta_star,
above eps0 from the weight beta0 that makes the crossing coefficient
exactly 1/2. The end-to-end good-weight fraction is
F(eps) = integral over r in (0,1] of max(1/2, f(eps/r)), and the
approximation ratio G(eps) = F(eps)/(1-eps) attains its minimum
~0.614247 at eps ~ 0.1109. H is the earlier published bound with
minimum ~0.531, kept for comparison curves.
"""

import csv
import functools
import math

import numpy as np
from scipy.optimize import brentq, minimize_scalar

_SQRT5 = math.sqrt(5.0)


def _check_range(eps):
    if not (0.0 <= eps <= 0.5):
        raise ValueError(f"eps={eps} outside [0, 1/2]")


def _branch_high(eps):
    # valid bound for all eps, tight for eps >= eps0
    return (-1.0 + math.sqrt(4.0 * eps * eps - 8.0 * eps + 5.0)) / (2.0 * (1.0 - eps))


def _branch_low(eps):
    # stationary-beta bound, applicable (beta0 <= beta_star) iff eps <= eps0
    return 1.0 / (1.0 + 2.0 * math.sqrt(eps * (1.0 - eps)))


def beta0(eps):
    """Mixing weight with beta0 + 2(1-eps) beta0 (1-beta0) = 1/2."""
    _check_range(eps)
    return (3.0 - 2.0 * eps - math.sqrt(4.0 * eps * eps - 8.0 * eps + 5.0)) / (4.0 * (1.0 - eps))


def beta_star(eps):
    """Stationary point of (1-2b) / (2(1-b)(1-2(1-eps)b))."""
    _check_range(eps)
    return 0.5 - 0.5 * math.sqrt(eps / (1.0 - eps))


@functools.lru_cache(maxsize=None)
def find_epsilon0(tol=1e-14):
    """Crossover point where the two f-branches meet (~0.228155).

    The branches are tangent there (their difference never changes
    sign), so the root is located via the equivalent condition
    beta0(eps) = beta_star(eps), which does cross zero.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    return brentq(lambda e: beta0(e) - beta_star(e), 0.1, 0.3,
                  xtol=tol, rtol=8.881784197001252e-16)


def f(eps):
    """Per-level recoverable-ratio guarantee, in [sqrt(2)-1, 1]."""
    _check_range(eps)
    if eps >= find_epsilon0():
        return _branch_high(eps)
    return _branch_low(eps)


def f_prev(eps):
    """Earlier per-level bound 1 - 2 sqrt(eps); goes negative past 1/4."""
    _check_range(eps)
    return 1.0 - 2.0 * math.sqrt(eps)


@functools.lru_cache(maxsize=8)
def _gauss_nodes(order):
    nodes, weights = np.polynomial.legendre.leggauss(order)
    return nodes, weights


def _integrate(fn, lo, hi, n_points):
    if hi <= lo:
        return 0.0
    nodes, weights = _gauss_nodes(n_points)
    mid, half = (lo + hi) / 2.0, (hi - lo) / 2.0
    xs = mid + half * nodes
    return float(half * np.sum(weights * np.vectorize(fn)(xs)))


def F_integral(eps, n_points=96):
    """End-to-end good-weight fraction: integral of max(1/2, f(eps/r)).

    The integrand is 1/2 for r <= 3*eps and switches f-branch at
    r = eps/eps0, so the quadrature is split exactly at both points.
    """
    _check_range(eps)
    if eps == 0.0:
        return 1.0
    eps0 = find_epsilon0()
    cut_half = min(3.0 * eps, 1.0)      # below: integrand == 1/2
    cut_branch = min(eps / eps0, 1.0)   # below: high branch, above: low branch
    total = 0.5 * cut_half
    total += _integrate(lambda r: _branch_high(eps / r), cut_half, cut_branch, n_points)
    total += _integrate(lambda r: _branch_low(eps / r), cut_branch, 1.0, n_points)
    return total


def G_closed(eps):
    """Closed-form approximation ratio F(eps)/(1-eps), three branches."""
    _check_range(eps)
    if eps == 0.0:
        return 1.0  # limit value
    if eps >= 1.0 / 3.0:
        return 1.0 / (2.0 * (1.0 - eps))
    eps0 = find_epsilon0()
    if eps >= eps0:
        q = math.sqrt(4.0 * eps * eps - 8.0 * eps + 5.0)
        bracket = (eps - 1.0 + q
                   - eps * math.log((1.0 + q) / (8.0 * eps))
                   + (_SQRT5 / 5.0) * eps * math.log(
                       (5.0 - 4.0 * eps + _SQRT5 * q) / ((11.0 + 5.0 * _SQRT5) * eps)))
        return bracket / (2.0 * (1.0 - eps))
    q0 = math.sqrt(4.0 * eps0 * eps0 - 8.0 * eps0 + 5.0)
    s0 = math.sqrt(eps0 * (1.0 - eps0))
    se, s1e = math.sqrt(eps), math.sqrt(1.0 - eps)
    bracket = (eps * (1.0 - 3.0 / eps0) + 2.0 + (eps / eps0) * q0
               - eps * math.log((1.0 + q0) / (8.0 * eps0))
               + (_SQRT5 / 5.0) * eps * math.log(
                   (5.0 - 4.0 * eps0 + _SQRT5 * q0) / ((11.0 + 5.0 * _SQRT5) * eps0))
               + 16.0 * eps * math.log((se + s1e) / (se + math.sqrt(eps / eps0 - eps)))
               + 8.0 * eps * (s0 + 1.0 - 2.0 * eps0) / (eps0 + s0)
               - 8.0 * se * (math.sqrt(eps * (1.0 - eps)) + 1.0 - 2.0 * eps) / (se + s1e))
    return bracket / (2.0 * (1.0 - eps))


def H_prev(eps):
    """Earlier end-to-end ratio bound, minimum ~0.531."""
    _check_range(eps)
    if eps <= 1.0 / 16.0:
        return (1.0 - 4.0 * math.sqrt(eps) + 8.0 * eps) / (1.0 - eps)
    return 1.0 / (2.0 * (1.0 - eps))


def minimize_G(tol=1e-10):
    """Locate the minimum of G over (0, 1/2]: returns (eps_star, g_min)."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    res = minimize_scalar(G_closed, bounds=(1e-6, 0.5), method="bounded",
                          options={"xatol": tol})
    return float(res.x), float(res.fun)


def curve_table(grid_size):
    """Uniform-grid rows (eps, f, f_prev, F, G, H) over [0, 1/2]."""
    if grid_size < 2:
        raise ValueError(f"grid_size must be >= 2, got {grid_size}")
    rows = []
    for eps in np.linspace(0.0, 0.5, grid_size):
        eps = float(eps)
        rows.append((eps, f(eps), f_prev(eps), F_integral(eps), G_closed(eps),
                     H_prev(eps)))
    return rows


CURVE_HEADER = ("eps", "f", "f_prev", "F", "G", "H")


def write_curve_csv(rows, path):
    """Write curve_table rows as CSV with >= 10 significant digits."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CURVE_HEADER)
        for row in rows:
            writer.writerow([f"{v:.12g}" for v in row])
