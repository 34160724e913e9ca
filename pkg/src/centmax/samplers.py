"""Hyper-edge samplers.

Each sampler emits a random node set h with Pr(h intersects S) = C(S)/alpha
for every S, where C is the centrality being estimated and alpha its
normalizer.  Samplers are pure functions of (graph, parameters, rng) and are
exact: path choices use integer path-count ratios, never floats.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import INF, bfs_dag, bfs_dist_sigma, _CACHE_MAX_N

KINDS = ("betweenness", "coverage", "kpath", "rr-influence")


@dataclass(frozen=True)
class SamplerSpec:
    """Which sampler to run, plus its parameters."""
    kind: str
    kappa: int = 2        # kpath only
    p: float = 0.01       # rr-influence only

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown sampler kind {self.kind!r}")
        if self.kind == "kpath" and self.kappa < 1:
            raise ValueError("kappa must be a positive integer")
        if self.kind == "rr-influence" and not 0.0 <= self.p <= 1.0:
            raise ValueError("edge probability p must be in [0,1]")


def alpha(spec, g):
    """Normalizer: n(n-1) for pair-based samplers, n for the others."""
    if spec.kind in ("betweenness", "coverage"):
        return g.n * (g.n - 1)
    return g.n


def sample(g, spec, rng):
    """Draw one hyper-edge according to spec."""
    if spec.kind == "betweenness":
        return sample_bwc(g, rng)
    if spec.kind == "coverage":
        return sample_coverage(g, rng)
    if spec.kind == "kpath":
        return sample_kpath(g, spec.kappa, rng)
    return sample_rr(g, spec.p, rng)


def _random_ordered_pair(n, rng):
    s = rng.randrange(n)
    t = rng.randrange(n - 1)
    if t >= s:
        t += 1
    return s, t


def sample_bwc(g, rng):
    """Internal nodes of a uniformly random shortest path between a
    uniformly random ordered pair; empty if unreachable or adjacent."""
    if g.n < 2:
        raise ValueError("betweenness sampler needs n >= 2")
    s, t = _random_ordered_pair(g.n, rng)
    if g.n <= _CACHE_MAX_N:
        dag = bfs_dag(g, s)
        dist, sigma = dag.dist, dag.sigma
        if dist[t] is INF or dist[t] <= 1:
            return frozenset()
        # Walk backward from t, picking each predecessor u with probability
        # sigma(u)/sigma(v); exact uniformity over all shortest paths.
        internal = []
        v = t
        while dist[v] > 1:
            r = rng.randrange(sigma[v])
            for u in dag.preds[v]:
                r -= sigma[u]
                if r < 0:
                    v = u
                    break
            internal.append(v)
        return frozenset(internal)
    dist, sigma = bfs_dist_sigma(g, s, stop_at=t)
    dt = int(dist[t])
    if dt < 0 or dt <= 1:
        return frozenset()
    internal = []
    v = t
    while int(dist[v]) > 1:
        dvm1 = int(dist[v]) - 1
        preds = [int(u) for u in g.radj[v] if dist[u] == dvm1]
        total = sum(int(sigma[u]) for u in preds)
        r = rng.randrange(total)
        for u in preds:
            r -= int(sigma[u])
            if r < 0:
                v = u
                break
        internal.append(v)
    return frozenset(internal)


def sample_coverage(g, rng):
    """All internal nodes lying on any shortest path of a random ordered
    pair; empty if unreachable or adjacent."""
    if g.n < 2:
        raise ValueError("coverage sampler needs n >= 2")
    s, t = _random_ordered_pair(g.n, rng)
    if g.n <= _CACHE_MAX_N:
        dist_s = bfs_dag(g, s).dist
        dist_t = bfs_dag(g, t, reverse=True).dist
        d = dist_s[t]
        if d is INF or d <= 1:
            return frozenset()
        return frozenset(v for v in range(g.n)
                         if v != s and v != t and dist_s[v] + dist_t[v] == d)
    dist_s, _ = bfs_dist_sigma(g, s)
    d = int(dist_s[t])
    if d < 0 or d <= 1:
        return frozenset()
    dist_t, _ = bfs_dist_sigma(g, t, reverse=True)
    hits = ((dist_s >= 0) & (dist_t >= 0) & (dist_s + dist_t == d)).nonzero()[0]
    return frozenset(int(v) for v in hits if v != s and v != t)


def sample_kpath(g, kappa, rng):
    """Random simple walk: uniform start, then uniform unvisited neighbors,
    stopping after kappa edges or when stuck.  The start node is included."""
    if kappa < 1:
        raise ValueError("kappa must be a positive integer")
    if g.n < 1:
        raise ValueError("kpath sampler needs n >= 1")
    v = rng.randrange(g.n)
    visited = {v}
    for _ in range(kappa):
        options = [w for w in g.adj[v] if w not in visited]
        if not options:
            break
        v = options[rng.randrange(len(options))]
        visited.add(v)
    return frozenset(visited)


def sample_rr(g, p, rng):
    """Reverse-reachable set of a uniform target: nodes reaching it through
    edges that are independently live with probability p.  Includes the
    target."""
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability p must be in [0,1]")
    if g.n < 1:
        raise ValueError("rr sampler needs n >= 1")
    v = rng.randrange(g.n)
    reached = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for u in g.radj[x]:
            if u not in reached and (p >= 1.0 or rng.random() < p):
                reached.add(u)
                stack.append(u)
    return frozenset(reached)


def dump_hyperedges(edges, path, labels=None):
    """One line per hyper-edge: space-separated ids; empty line = empty set."""
    with open(path, "w") as fh:
        for h in edges:
            ids = sorted(h) if labels is None else sorted(labels[v] for v in h)
            fh.write(" ".join(str(x) for x in ids) + "\n")


def load_hyperedges(path):
    """Inverse of dump_hyperedges (ids taken as written, no remapping)."""
    out = []
    with open(path) as fh:
        for line in fh:
            line = line.rstrip("\n")
            out.append(frozenset(int(tok) for tok in line.split()))
    return out
