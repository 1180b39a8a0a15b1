"""Colored weighted graphs: construction, generators, and the mcc text format.

Vertices are 0-indexed internally; the text format is 1-indexed
(DIMACS convention). Edges carry a nonnegative weight and a color
(red or blue). Graphs are immutable once built.
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np


class EdgeColor(Enum):
    RED = "r"
    BLUE = "b"


@dataclass(frozen=True)
class ColoredGraph:
    """Immutable colored weighted graph on vertices 0..n-1.

    ``edges`` is canonical: endpoints ordered u < v, at most one edge
    per (pair, color), sorted by (u, v, color). A red and a blue edge
    may coexist on the same pair.
    """

    n: int
    edges: tuple  # of (u, v, w, EdgeColor)

    @property
    def m(self):
        return len(self.edges)

    def edge_arrays(self):
        """Return (us, vs, ws, is_red) as numpy arrays."""
        if self.m == 0:
            return (np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64),
                    np.empty(0, dtype=np.float64), np.empty(0, dtype=bool))
        us = np.fromiter((e[0] for e in self.edges), dtype=np.int64, count=self.m)
        vs = np.fromiter((e[1] for e in self.edges), dtype=np.int64, count=self.m)
        ws = np.fromiter((e[2] for e in self.edges), dtype=np.float64, count=self.m)
        red = np.fromiter((e[3] is EdgeColor.RED for e in self.edges), dtype=bool, count=self.m)
        return us, vs, ws, red

    def weighted_degrees(self):
        """Weighted degree of every vertex (sum over both colors)."""
        us, vs, ws, _ = self.edge_arrays()
        deg = np.zeros(self.n)
        np.add.at(deg, us, ws)
        np.add.at(deg, vs, ws)
        return deg


class GraphError(ValueError):
    pass


def build(n, raw_edges):
    """Validate and canonicalize a graph from raw (u, v, w, color) tuples.

    Parallel edges of the same color are merged by weight addition.
    Self-loops, out-of-range endpoints and negative/non-finite weights
    are rejected.
    """
    if n < 1:
        raise GraphError(f"vertex count must be >= 1, got {n}")
    merged = {}
    for (u, v, w, c) in raw_edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) has endpoint out of range [0,{n})")
        if u == v:
            raise GraphError(f"self-loop on vertex {u} rejected")
        if not isinstance(c, EdgeColor):
            raise GraphError(f"edge color must be EdgeColor, got {c!r}")
        w = float(w)
        if not math.isfinite(w) or w < 0:
            raise GraphError(f"edge ({u},{v}) has invalid weight {w}")
        key = (min(u, v), max(u, v), c)
        merged[key] = merged.get(key, 0.0) + w
    edges = tuple((u, v, w, c) for (u, v, c), w in
                  sorted(merged.items(), key=lambda kv: (kv[0][0], kv[0][1], kv[0][2].value)))
    return ColoredGraph(n=n, edges=edges)


def total_weight(g):
    return float(sum(e[2] for e in g.edges))


def induced_subgraph(g, s):
    """Subgraph induced by vertex set ``s``; returns (graph, old->new map)."""
    s = sorted(set(s))
    if not s:
        raise GraphError("induced subgraph of empty vertex set")
    if s[0] < 0 or s[-1] >= g.n:
        raise GraphError("vertex id out of range in induced_subgraph")
    remap = {old: new for new, old in enumerate(s)}
    edges = [(remap[u], remap[v], w, c) for (u, v, w, c) in g.edges
             if u in remap and v in remap]
    return build(len(s), edges), remap


def generate(model, n, p=0.5, red_fraction=1.0, seed=0, n_left=None):
    """Deterministic random/structured instance generator.

    Models: ``gnp`` (Erdos-Renyi, unit weights), ``cycle``, ``complete``,
    ``bipartite`` (complete bipartite with ``n_left`` vertices on one side,
    default n // 2). Each edge is red with probability ``red_fraction``
    (gnp) or gets red iff drawn so for structured models.
    """
    if n < 1:
        raise GraphError(f"n must be >= 1, got {n}")
    if not (0.0 <= p <= 1.0):
        raise GraphError(f"p must be in [0,1], got {p}")
    if not (0.0 <= red_fraction <= 1.0):
        raise GraphError(f"red_fraction must be in [0,1], got {red_fraction}")
    rng = np.random.default_rng(seed)

    def color():
        return EdgeColor.RED if rng.random() < red_fraction else EdgeColor.BLUE

    edges = []
    if model == "gnp":
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < p:
                    edges.append((u, v, 1.0, color()))
    elif model == "cycle":
        if n == 2:
            edges.append((0, 1, 1.0, color()))
        elif n >= 3:
            for u in range(n):
                v = (u + 1) % n
                edges.append((min(u, v), max(u, v), 1.0, color()))
    elif model == "complete":
        for u in range(n):
            for v in range(u + 1, n):
                edges.append((u, v, 1.0, color()))
    elif model == "bipartite":
        a = n // 2 if n_left is None else n_left
        if not (1 <= a < n):
            raise GraphError(f"bipartite split {a} invalid for n={n}")
        for u in range(a):
            for v in range(a, n):
                edges.append((u, v, 1.0, color()))
    else:
        raise GraphError(f"unknown model {model!r}")
    return build(n, edges)


def serialize(g):
    """Write the mcc text format (1-indexed, canonical edge order)."""
    lines = [f"p mcc {g.n} {g.m}"]
    for (u, v, w, c) in g.edges:
        lines.append(f"e {u + 1} {v + 1} {w:.17g} {c.value}")
    return "\n".join(lines) + "\n"


def parse(text):
    """Parse the mcc text format; inverse of serialize up to canonicalization."""
    n = None
    declared_m = None
    raw = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise GraphError(f"line {lineno}: duplicate header")
            if len(parts) != 4 or parts[1] != "mcc":
                raise GraphError(f"line {lineno}: malformed header {line!r}")
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphError(f"line {lineno}: malformed header {line!r}")
        elif parts[0] == "e":
            if n is None:
                raise GraphError(f"line {lineno}: edge before header")
            if len(parts) != 5:
                raise GraphError(f"line {lineno}: malformed edge {line!r}")
            try:
                u, v, w = int(parts[1]), int(parts[2]), float(parts[3])
            except ValueError:
                raise GraphError(f"line {lineno}: malformed edge {line!r}")
            if parts[4] not in ("r", "b"):
                raise GraphError(f"line {lineno}: unknown color {parts[4]!r}")
            c = EdgeColor.RED if parts[4] == "r" else EdgeColor.BLUE
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphError(f"line {lineno}: endpoint out of range 1..{n}")
            raw.append((u - 1, v - 1, w, c))
        else:
            raise GraphError(f"line {lineno}: unrecognized line {line!r}")
    if n is None:
        raise GraphError("missing header line 'p mcc <n> <m>'")
    if declared_m != len(raw):
        raise GraphError(f"header declares {declared_m} edges, found {len(raw)}")
    return build(n, raw)
