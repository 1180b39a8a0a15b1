"""Exhaustive exact solver for desk-scale instances.

Enumerates all bipartitions (vertex 0 fixed on side +1; both colored
quadratic forms are invariant under global sign flip) in vectorized
chunks. Hard-guarded at n <= 24.
"""

from dataclasses import dataclass

import numpy as np

from . import graph as graphmod
from . import guarantee, solver

MAX_ORACLE_N = 24
_CHUNK_BITS = 16


class OracleSizeError(ValueError):
    pass


@dataclass
class OracleResult:
    opt_value: float
    witness: np.ndarray
    epsilon: float  # 1 - opt/w(E); 0 when w(E) = 0


@dataclass
class Verdict:
    meets_integral_bound: bool
    meets_ratio: bool
    meets_half: bool
    ratio: float


def brute_force(g):
    """Exact maximum colored cut by enumeration of 2^(n-1) bipartitions."""
    if g.n > MAX_ORACLE_N:
        raise OracleSizeError(
            f"n={g.n} exceeds the oracle limit of {MAX_ORACLE_N}")
    w_total = graphmod.total_weight(g)
    us, vs, ws, red = g.edge_arrays()
    n_codes = 1 << (g.n - 1)
    best_val = -np.inf
    best_code = 0
    bits = np.arange(g.n, dtype=np.uint32)
    for start in range(0, n_codes, 1 << _CHUNK_BITS):
        stop = min(start + (1 << _CHUNK_BITS), n_codes)
        # vertex 0 maps to bit-free +1; vertex i>0 to bit i-1
        codes = np.arange(start, stop, dtype=np.uint32)
        signs = np.ones((stop - start, g.n), dtype=np.int8)
        if g.n > 1:
            sel = (codes[:, None] >> (bits[None, 1:] - 1)) & 1
            signs[:, 1:] = 1 - 2 * sel.astype(np.int8)
        if g.m:
            cut = signs[:, us] != signs[:, vs]
            goods = cut @ np.where(red, ws, 0.0) + (~cut) @ np.where(red, 0.0, ws)
        else:
            goods = np.zeros(stop - start)
        idx = int(np.argmax(goods))
        if goods[idx] > best_val:
            best_val = float(goods[idx])
            best_code = start + idx
    witness = np.ones(g.n, dtype=np.int8)
    for i in range(1, g.n):
        if (best_code >> (i - 1)) & 1:
            witness[i] = -1
    epsilon = 0.0 if w_total == 0 else 1.0 - best_val / w_total
    epsilon = min(max(epsilon, 0.0), 0.5)
    return OracleResult(opt_value=best_val, witness=witness, epsilon=epsilon)


def verify_report(g, report, tol=1e-6):
    """Check a solve report against the oracle and the analysis bounds.

    (a) good >= F(eps) * w(E) - tol * w(E); (b) good/opt >= g_min - tol;
    (c) good >= w(E)/2 - tol * w(E).
    """
    res = brute_force(g)
    w_total = graphmod.total_weight(g)
    good = solver.good_weight(g, report.y)
    ratio = 1.0 if res.opt_value == 0 else good / res.opt_value
    _, g_min = guarantee.minimize_G()
    bound = guarantee.F_integral(res.epsilon) * w_total
    return Verdict(
        meets_integral_bound=good >= bound - tol * max(w_total, 1.0),
        meets_ratio=ratio >= g_min - tol,
        meets_half=good >= w_total / 2.0 - tol * max(w_total, 1.0),
        ratio=ratio,
    )
