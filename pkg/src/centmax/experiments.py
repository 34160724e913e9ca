"""Experiment drivers: centrality-ranked attack curves, influence spread,
influence-maximization baseline, and time-evolving snapshot series."""
from __future__ import annotations

import math
import random
from dataclasses import dataclass

from . import exact, maximize, samplers
from .graph import Graph, graph_from_labeled_edges, largest_component_size

DEFAULT_ORDERING_EPS = 0.25


def ordering_budget(n, eps=DEFAULT_ORDERING_EPS):
    return math.ceil(100.0 * math.log(n) / (eps * eps))


def centrality_ordering(g, spec, rng, eps=DEFAULT_ORDERING_EPS):
    """Full greedy pick order over all nodes.

    spec is a SamplerSpec, or the string "triangle" for the exact
    triangle-cover greedy (no sampling involved).
    """
    if spec == "triangle":
        return exact.triangle_greedy(g, g.n)
    if g.n < 2:
        raise ValueError("need n >= 2")
    pool = maximize.build_pool(g, spec, ordering_budget(g.n, eps), rng)
    return maximize.greedy_cover(pool, g.n).selected


@dataclass
class AttackCurve:
    """largest-component size after removing each prefix of an ordering."""
    removed: list     # 0..cap
    lcc_size: list

    def rows(self):
        return list(zip(self.removed, self.lcc_size))


def attack_curve(g, ordering, cap):
    """Largest weakly connected component size for every removal prefix
    0..cap, via reverse insertion with union-find (near-linear total)."""
    if cap > g.n:
        raise ValueError(f"cap={cap} exceeds n={g.n}")
    prefix = list(ordering[:cap])
    removed = set(prefix)
    parent = list(range(g.n))
    size = [1] * g.n

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra == rb:
            return size[ra]
        if size[ra] < size[rb]:
            ra, rb = rb, ra
        parent[rb] = ra
        size[ra] += size[rb]
        return size[ra]

    active = [v not in removed for v in range(g.n)]
    best = 0
    sizes = [0] * (cap + 1)
    for u in range(g.n):
        if not active[u]:
            continue
        for v in g.weak_neighbors(u):
            if u < v and active[v]:
                best = max(best, union(u, v))
    if any(active):
        best = max(best, 1)
    sizes[cap] = best
    for i in range(cap - 1, -1, -1):
        u = prefix[i]
        active[u] = True
        best = max(best, 1)
        for v in g.weak_neighbors(u):
            if active[v]:
                best = max(best, union(u, v))
        sizes[i] = best
    return AttackCurve(list(range(cap + 1)), sizes)


def ic_spread(g, seeds, p, runs=10000, rng=None):
    """Monte Carlo mean cascade size from a seed set: each directed edge is
    live independently with probability p, re-flipped per cascade."""
    if runs < 1:
        raise ValueError("runs must be positive")
    rng = rng if rng is not None else random.Random(0)
    seeds = list(set(seeds))
    total = 0
    for _ in range(runs):
        reached = set(seeds)
        stack = list(seeds)
        while stack:
            u = stack.pop()
            for v in g.adj[u]:
                if v not in reached and (p >= 1.0 or rng.random() < p):
                    reached.add(v)
                    stack.append(v)
        total += len(reached)
    return total / runs


def ris_influence_max(g, k, num_rr, p, rng):
    """Influence-maximization baseline: greedy cover over reverse-reachable
    sets.  Returns the seed set in pick order."""
    spec = samplers.SamplerSpec("rr-influence", p=p)
    pool = maximize.build_pool(g, spec, num_rr, rng)
    return maximize.greedy_cover(pool, k).selected


@dataclass
class EvolutionRow:
    timestamp: int
    n: int
    m: int
    avg_degree: float
    k: int
    scaled_centrality: float


def evolve(temporal, snapshots, ks, spec, rng, eps=DEFAULT_ORDERING_EPS,
           mode="cumulative", directed=False):
    """Per-snapshot sampled centrality of the greedy top-k, for each k.

    Snapshot graphs are built from the temporal edge list in `mode`
    ("cumulative": all edges up to the timestamp; "exact": edges stamped
    exactly at it, for dump-style datasets with deletions).
    """
    rows = []
    for when in snapshots:
        pairs = temporal.snapshot_edges(when, mode=mode)
        if not pairs:
            for k in ks:
                rows.append(EvolutionRow(when, 0, 0, 0.0, k, 0.0))
            continue
        g = graph_from_labeled_edges(pairs, directed=directed)
        avg_deg = (1 if directed else 2) * g.m / g.n
        kmax = min(max(ks), g.n)
        if g.n < 2:
            for k in ks:
                rows.append(EvolutionRow(when, g.n, g.m, avg_deg, k, 0.0))
            continue
        pool = maximize.build_pool(g, spec, ordering_budget(g.n, eps), rng)
        result = maximize.greedy_cover(pool, kmax)
        scaled = result.scaled_centrality()
        for k in ks:
            rows.append(EvolutionRow(when, g.n, g.m, avg_deg, k,
                                     scaled[min(k, kmax) - 1]))
    return rows


def snapshot_grid(temporal, count):
    """`count` equally spaced timestamp quantiles of the temporal data."""
    times = [t for _, _, t in temporal.records]
    if not times:
        return []
    if count == 1:
        return [times[-1]]
    out = []
    for i in range(count):
        idx = round(i * (len(times) - 1) / (count - 1))
        out.append(times[idx])
    return sorted(set(out))
