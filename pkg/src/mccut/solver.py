"""Recursive spectral partitioning solver.

Each level computes the leading relaxation vector, derandomizes the
threshold rounding, and either stops with a greedy half-cut (when the
best recoverable ratio drops below 1/2) or fixes the decided vertices
and recurses on the undecided set, recombining with the better of the
two orientations.
"""

from dataclasses import dataclass, field

import numpy as np

from . import graph as graphmod
from . import rounding, spectral


@dataclass
class SolveParams:
    eig_tol: float = 1e-9
    eig_max_iter: int | None = None
    seed: int = 0
    max_depth: int | None = None     # default: n
    random_half_cut: bool = False    # greedy derandomized cut by default


@dataclass
class LevelRecord:
    n: int
    decided: int
    ratio: float | None
    rho: float | None
    fallback: bool


@dataclass
class SolveReport:
    y: np.ndarray
    good_weight: float
    trace: list = field(default_factory=list)


def good_weight(g, y):
    """Weight of red edges cut by y plus blue edges uncut by y."""
    y = np.asarray(y)
    if y.shape != (g.n,):
        raise ValueError(f"y length {y.shape} does not match n={g.n}")
    if np.any(y == 0):
        raise ValueError("bipartition vector must have no zero entries")
    us, vs, ws, red = g.edge_arrays()
    cut = y[us] * y[vs] < 0
    return float(np.sum(ws[cut & red]) + np.sum(ws[~cut & ~red]))


def half_cut(g, seed=0, random=False):
    """A bipartition with good weight >= w(E)/2.

    Default is the greedy derandomization: each vertex in turn joins the
    side that makes the larger good weight against already-placed
    neighbors (ties go to +1), so every edge is good in the better of
    the two choices at its later endpoint. With random=True a seeded
    uniform cut is returned instead (>= w(E)/2 only in expectation).
    """
    if random:
        rng = np.random.default_rng(seed)
        return np.where(rng.random(g.n) < 0.5, 1, -1).astype(np.int8)
    y = np.zeros(g.n, dtype=np.int8)
    nbrs = [[] for _ in range(g.n)]
    for (u, v, w, c) in g.edges:
        blue_sign = 1.0 if c is graphmod.EdgeColor.BLUE else -1.0
        nbrs[u].append((v, w, blue_sign))
        nbrs[v].append((u, w, blue_sign))
    for i in range(g.n):
        # score of placing i on side s: sum over placed nbrs of w * [good]
        # good for red iff sides differ, for blue iff they agree
        score_plus = 0.0
        score_minus = 0.0
        for (j, w, blue_sign) in nbrs[i]:
            if y[j] != 0:
                if blue_sign * y[j] > 0:
                    score_plus += w
                else:
                    score_minus += w
        y[i] = 1 if score_plus >= score_minus else -1
    return y


def solve(g, params=None):
    """Run the full recursive algorithm and return a SolveReport."""
    if params is None:
        params = SolveParams()
    max_depth = params.max_depth if params.max_depth is not None else g.n
    trace = []
    y = _solve_rec(g, params, trace, depth=0, max_depth=max_depth)
    return SolveReport(y=y, good_weight=good_weight(g, y), trace=trace)


def _solve_rec(g, params, trace, depth, max_depth):
    us, vs, ws, _ = g.edge_arrays()
    if g.m == 0 or not np.any(ws > 0):
        # edgeless (or zero total weight): any side is optimal
        y = np.ones(g.n, dtype=np.int8)
        trace.append(LevelRecord(n=g.n, decided=g.n, ratio=None, rho=None,
                                 fallback=False))
        return y
    if depth >= max_depth:
        trace.append(LevelRecord(n=g.n, decided=g.n, ratio=None, rho=None,
                                 fallback=True))
        return half_cut(g, seed=params.seed, random=params.random_half_cut)

    res = spectral.leading_relaxation_vector(
        g, tol=params.eig_tol, max_iter=params.eig_max_iter, seed=params.seed)
    z, stats = rounding.best_tripartition(g, res.x)
    ratio = rounding.recoverable_ratio(stats)

    if ratio is not None and ratio < 0.5:
        trace.append(LevelRecord(n=g.n, decided=g.n, ratio=ratio, rho=res.rho,
                                 fallback=True))
        return half_cut(g, seed=params.seed, random=params.random_half_cut)
    # ratio None means inc == 0: only zero-weight edges touch the decided
    # set, so nothing is at stake; proceed to recursion

    undecided = np.flatnonzero(z == 0)
    decided = g.n - len(undecided)
    trace.append(LevelRecord(n=g.n, decided=decided, ratio=ratio, rho=res.rho,
                             fallback=False))
    y = np.array(z, dtype=np.int8)
    if len(undecided) == 0:
        return y
    sub, remap = graphmod.induced_subgraph(g, undecided.tolist())
    w_sub = _solve_rec(sub, params, trace, depth + 1, max_depth)
    for old, new in remap.items():
        y[old] = w_sub[new]
    y_flipped = np.array(y)
    for old in remap:
        y_flipped[old] = -y_flipped[old]
    if good_weight(g, y_flipped) > good_weight(g, y):
        return y_flipped
    return y
