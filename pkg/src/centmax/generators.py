"""Synthetic graph generators: stochastic Kronecker graphs, random
Apollonian networks, hypercubes, and the rook-plus-isolated-nodes family
used to stress pair-sampling estimators."""
from __future__ import annotations

import math
import random

import numpy as np

from .graph import Graph

# Exact per-pair Bernoulli sampling is quadratic in n; above this many
# levels we switch to ball dropping.
_KRON_EXACT_MAX_I = 12


def _np_rng(rng):
    return np.random.default_rng(rng.getrandbits(64))


def kronecker_probability_matrix(seed, i):
    """Full n x n edge-probability matrix (n = 2^i) as the i-fold Kronecker
    power of the 2x2 seed."""
    p = np.asarray(seed, dtype=np.float64)
    if p.shape != (2, 2) or (p < 0).any() or (p > 1).any():
        raise ValueError("seed must be a 2x2 matrix of probabilities")
    out = np.array([[1.0]])
    for _ in range(i):
        out = np.kron(out, p)
    return out


def expected_kronecker_edges(seed, i):
    """(mean, std) of the simple undirected edge count for a 2^i-node
    stochastic Kronecker graph."""
    p = np.asarray(seed, dtype=np.float64)
    total = p.sum() ** i
    diag = (p[0, 0] + p[1, 1]) ** i
    total_sq = (p ** 2).sum() ** i
    diag_sq = (p[0, 0] ** 2 + p[1, 1] ** 2) ** i
    mean = (total - diag) / 2.0
    var = ((total - total_sq) - (diag - diag_sq)) / 2.0
    return mean, math.sqrt(max(var, 0.0))


def gen_kronecker(seed, i, rng, method=None):
    """Undirected simple stochastic Kronecker graph on 2^i nodes.

    method "exact" samples every pair Bernoulli (quadratic, i <= 12);
    "ball" drops a Poisson number of edges cell-by-cell down the seed
    recursion (any i).  Default picks by size.
    """
    if not 1 <= i <= 24:
        raise ValueError("i must be in 1..24")
    if method is None:
        method = "exact" if i <= _KRON_EXACT_MAX_I else "ball"
    n = 2 ** i
    nrng = _np_rng(rng)
    if method == "exact":
        prob = kronecker_probability_matrix(seed, i)
        upper = np.triu(nrng.random((n, n)) < prob, k=1)
        us, vs = np.nonzero(upper)
        edges = list(zip(us.tolist(), vs.tolist()))
    elif method == "ball":
        p = np.asarray(seed, dtype=np.float64)
        mass = p.sum()
        # Each undirected edge can arrive through either ordered cell, so
        # half the ordered-cell mass keeps expected edge counts aligned
        # with the per-pair Bernoulli model.
        count = int(nrng.poisson(mass ** i / 2.0))
        cell_p = (p / mass).ravel()
        cells = nrng.choice(4, size=(count, i), p=cell_p)
        rows = cells // 2
        cols = cells % 2
        weights = (1 << np.arange(i - 1, -1, -1, dtype=np.int64))
        us = (rows * weights).sum(axis=1)
        vs = (cols * weights).sum(axis=1)
        edges = list(zip(us.tolist(), vs.tolist()))
    else:
        raise ValueError(f"unknown kronecker method {method!r}")
    meta = {"generator": "kronecker", "i": i, "method": method,
            "seed_matrix": [float(x) for row in np.asarray(seed) for x in row]}
    return Graph(n, edges, directed=False, meta=meta)


class RanState:
    """Growing planar triangulation: each step splits a uniformly random
    active face with a fresh degree-3 node.

    After t steps (t nodes) the invariants are e = 3t-6 edges and
    f = 2t-5 active faces.
    """

    def __init__(self):
        self.t = 3
        self.faces = [(0, 1, 2)]          # active faces, order irrelevant
        self.edges = [(0, 1), (0, 2), (1, 2)]

    def step(self, rng):
        idx = rng.randrange(len(self.faces))
        # Swap-remove keeps face sampling O(1).
        self.faces[idx], self.faces[-1] = self.faces[-1], self.faces[idx]
        a, b, c = self.faces.pop()
        new = self.t
        self.t += 1
        self.edges.extend([(a, new), (b, new), (c, new)])
        self.faces.extend([(a, b, new), (a, c, new), (b, c, new)])
        return new


def gen_ran(n, rng):
    """Random Apollonian network on n >= 3 nodes."""
    if n < 3:
        raise ValueError("need n >= 3")
    state = RanState()
    while state.t < n:
        state.step(rng)
    meta = {"generator": "ran", "n": n}
    return Graph(n, state.edges, directed=False, meta=meta)


def gen_hypercube(r):
    """The r-dimensional hypercube: 2^r bitstring nodes, Hamming-1 edges."""
    if not 1 <= r <= 16:
        raise ValueError("r must be in 1..16")
    n = 2 ** r
    edges = [(v, v ^ (1 << b)) for v in range(n) for b in range(r)
             if v < v ^ (1 << b)]
    return Graph(n, edges, directed=False, meta={"generator": "hypercube", "r": r})


def gen_lower_bound(n, eps):
    """A rook's-graph component (rows x cols, rows = floor(eps*sqrt(n)),
    cols = floor(sqrt(n))) padded with isolated nodes up to n total.

    The component has diameter 2 and at most 2 shortest paths per pair, so
    only pair samples landing inside it are informative.
    """
    if not 0.0 < eps < 1.0:
        raise ValueError("eps must be in (0,1)")
    root = math.sqrt(n)
    rows = int(eps * root)
    cols = int(root)
    if rows < 2 or cols < 2:
        raise ValueError("degenerate rook dimensions; increase n or eps")
    if rows * cols > n:
        raise ValueError("rook component larger than n")
    edges = []
    node = lambda i, j: i * cols + j
    for i in range(rows):
        for j in range(cols):
            for jj in range(j + 1, cols):
                edges.append((node(i, j), node(i, jj)))
    for j in range(cols):
        for i in range(rows):
            for ii in range(i + 1, rows):
                edges.append((node(i, j), node(ii, j)))
    meta = {"generator": "lower-bound", "rows": rows, "cols": cols,
            "component_nodes": rows * cols, "isolated": n - rows * cols}
    return Graph(n, edges, directed=False, meta=meta)
