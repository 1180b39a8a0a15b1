"""Spectral relaxation: quadratic forms of M and D, and the leading vector
of the generalized eigenproblem via matrix-free power iteration.

M accumulates w_ij (x_i - x_j)^2 over red edges and w_ij (x_i + x_j)^2
over blue edges; D accumulates w_ij (x_i^2 + x_j^2). Neither matrix is
ever materialized: each operator application streams the edge list once.
"""

import math
from dataclasses import dataclass

import numpy as np


class SpectralError(ValueError):
    pass


@dataclass
class SpectralResult:
    x: np.ndarray       # relaxation vector, ||x||_inf = 1, zeros on isolated vertices
    rho: float          # Rayleigh ratio x'Mx / x'Dx
    epsilon: float      # 1 - rho/2 clamped to [0, 1/2]
    iterations: int
    residual: float     # ||S y - rho y|| at the returned iterate


def quadratic_forms(g, x):
    """Return (x'Mx, x'Dx) by streaming the edge list."""
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (g.n,):
        raise SpectralError(f"vector length {x.shape} does not match n={g.n}")
    us, vs, ws, red = g.edge_arrays()
    xu, xv = x[us], x[vs]
    diff2 = (xu - xv) ** 2
    sum2 = (xu + xv) ** 2
    mform = float(np.sum(ws * np.where(red, diff2, sum2)))
    dform = float(np.sum(ws * (xu ** 2 + xv ** 2)))
    return mform, dform


def _apply_m(n, us, vs, ws, red, x):
    # red edge: rank-1 term w (e_u - e_v)(e_u - e_v)'; blue: w (e_u + e_v)(e_u + e_v)'
    sgn = np.where(red, -1.0, 1.0)
    cu = ws * (x[us] + sgn * x[vs])
    out = np.bincount(us, weights=cu, minlength=n)
    out += np.bincount(vs, weights=sgn * cu, minlength=n)
    return out


def leading_relaxation_vector(g, tol=1e-9, max_iter=None, seed=0):
    """Power-iterate the symmetric operator D^{-1/2} M D^{-1/2}.

    Returns the relaxation vector x = D^{-1/2} y rescaled to unit
    infinity norm. Isolated vertices are excluded from the operator
    (D is singular there) and carry x-entry 0. Non-convergence within
    max_iter returns the best iterate with its residual, not an error.
    """
    us, vs, ws, red = g.edge_arrays()
    if g.m == 0 or not np.any(ws > 0):
        raise SpectralError("graph has no positive-weight edge")
    deg = g.weighted_degrees()
    active = deg > 0
    d_inv_sqrt = np.zeros(g.n)
    d_inv_sqrt[active] = 1.0 / np.sqrt(deg[active])
    if max_iter is None:
        max_iter = 10 * g.n * int(math.log(g.n + 1) + 1) + 1000

    def apply_s(y):
        return d_inv_sqrt * _apply_m(g.n, us, vs, ws, red, d_inv_sqrt * y)

    rng = np.random.default_rng(seed)
    y = np.where(active, rng.standard_normal(g.n), 0.0)
    y /= np.linalg.norm(y)
    rho_prev = -np.inf
    rho = 0.0
    residual = np.inf
    it = 0
    for it in range(1, max_iter + 1):
        z = apply_s(y)
        rho = float(y @ z)
        residual = float(np.linalg.norm(z - rho * y))
        if abs(rho - rho_prev) < tol * max(abs(rho), 1.0) and residual < tol:
            break
        rho_prev = rho
        nz = np.linalg.norm(z)
        if nz == 0.0:
            # y lies in the kernel of the PSD operator; restart
            y = np.where(active, rng.standard_normal(g.n), 0.0)
            y /= np.linalg.norm(y)
            continue
        y = z / nz

    x = d_inv_sqrt * y
    xmax = np.max(np.abs(x))
    if xmax > 0:
        x = x / xmax
    epsilon = min(max(1.0 - rho / 2.0, 0.0), 0.5)
    return SpectralResult(x=x, rho=rho, epsilon=epsilon, iterations=it,
                          residual=residual)
