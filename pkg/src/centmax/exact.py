"""Exact centrality oracles and exhaustive greedy/brute-force baselines.

All pair sums use the ordered-pair convention and count only internal path
nodes; path counts are exact Python integers, and per-pair ratio sums go
through math.fsum so results do not depend on accumulation order.
"""
from __future__ import annotations

import math
from itertools import combinations

from .errors import SizeError
from .graph import INF, all_triangles, bfs_dag, bfs_dist_sigma

_BRUTE_FORCE_GUARD = 10 ** 7


def brandes(g):
    """Exact per-node betweenness (ordered pairs) via per-source dependency
    accumulation."""
    scores = [0.0] * g.n
    for s in range(g.n):
        dag = bfs_dag(g, s)
        delta = [0.0] * g.n
        for w in reversed(dag.order):
            coeff = (1.0 + delta[w]) / dag.sigma[w]
            for v in dag.preds[w]:
                delta[v] += dag.sigma[v] * coeff
            if w != s:
                scores[w] += delta[w]
    # Summing over every source without halving gives the ordered-pair
    # convention for both directed and undirected graphs.
    return scores


def _avoidance_counts(g, dag, blocked):
    """Per-node counts of source-to-node shortest paths whose internal
    nodes avoid `blocked` (the source itself is exempt)."""
    s = dag.source
    tau = [0] * g.n
    tau[s] = 1
    for v in dag.order:
        if v == s:
            continue
        acc = 0
        for u in dag.preds[v]:
            if u == s or u not in blocked:
                acc += tau[u]
        tau[v] = acc
    return tau


def set_bwc(g, nodes):
    """Exact betweenness of a node set: ordered pairs (s,t), fraction of
    shortest paths with an internal node in the set."""
    blocked = set(nodes)
    for v in blocked:
        if not 0 <= v < g.n:
            raise ValueError(f"node {v} out of range")
    if not blocked:
        return 0.0
    terms = []
    for s in range(g.n):
        dag = bfs_dag(g, s)
        tau = _avoidance_counts(g, dag, blocked)
        for t in dag.order:
            if t == s or dag.dist[t] <= 1:
                continue
            terms.append(1.0 - tau[t] / dag.sigma[t])
    return math.fsum(terms)


def adaptive_bwc(g, u, nodes):
    """Marginal betweenness of u on top of an existing set."""
    nodes = set(nodes)
    if u in nodes:
        raise ValueError(f"node {u} already in the set")
    return set_bwc(g, nodes | {u}) - set_bwc(g, nodes)


def adaptive_bwc_all(g, nodes):
    """Marginal betweenness of every node on top of `nodes`, in one
    Brandes-style sweep per source (O(n(n+m)) total).

    For each source, tau counts paths avoiding the set; the backward pass
    accumulates, for each candidate u, the fraction of pairs whose avoiding
    paths route through u.
    """
    blocked = set(nodes)
    marg = [0.0] * g.n
    for s in range(g.n):
        dag = bfs_dag(g, s)
        tau = _avoidance_counts(g, dag, blocked)
        # delta[v] = sum over targets t beyond v of (avoiding continuations
        # from v to t) / sigma(t); endpoints are exempt from the block.
        delta = [0.0] * g.n
        for w in reversed(dag.order):
            if w == s:
                continue
            contrib = 1.0 / dag.sigma[w]
            if w not in blocked:
                contrib += delta[w]
            for v in dag.preds[w]:
                delta[v] += contrib
        for u in range(g.n):
            if u != s and u not in blocked and tau[u]:
                marg[u] += tau[u] * delta[u]
    return marg


def ex_greedy(g, k):
    """Exhaustive greedy: k rounds of exact best-marginal picks (ties to the
    smaller id).  Returns (selected, per-round exact set betweenness)."""
    if k > g.n:
        raise ValueError(f"k={k} exceeds n={g.n}")
    chosen = []
    scores = []
    total = 0.0
    for _ in range(k):
        marg = adaptive_bwc_all(g, chosen)
        best = None
        for v in range(g.n):
            if v in chosen:
                continue
            if best is None or marg[v] > marg[best] + 1e-12:
                best = v
        chosen.append(best)
        total += marg[best]
        scores.append(total)
    return chosen, scores


def brute_force_max(g, k):
    """Exact optimum over all size-k subsets.  Guarded: refuses above
    10^7 candidate subsets."""
    if k > g.n:
        raise ValueError(f"k={k} exceeds n={g.n}")
    if math.comb(g.n, k) > _BRUTE_FORCE_GUARD:
        raise SizeError(f"C({g.n},{k}) subsets exceed the enumeration guard")
    best_set, best_val = None, -1.0
    for subset in combinations(range(g.n), k):
        val = set_bwc(g, subset)
        if val > best_val:
            best_set, best_val = set(subset), val
    return best_set, best_val


def all_pairs_dist(g):
    """List of per-source distance lists (hop counts, INF if unreachable)."""
    return [bfs_dag(g, s).dist for s in range(g.n)]


def exact_coverage(g, nodes, dist=None):
    """Ordered pairs (s,t) with some shortest path internally hitting the
    set: v is internal on a shortest s-t path iff d(s,v)+d(v,t)=d(s,t)."""
    nodes = [v for v in set(nodes)]
    if not nodes:
        return 0.0
    if dist is None:
        dist = all_pairs_dist(g)
    count = 0
    for s in range(g.n):
        ds = dist[s]
        for t in range(g.n):
            if t == s or ds[t] is INF or ds[t] <= 1:
                continue
            for v in nodes:
                if v == s or v == t:
                    continue
                dvt = dist[v][t]
                if ds[v] is not INF and dvt is not INF and ds[v] + dvt == ds[t]:
                    count += 1
                    break
    return float(count)


def exact_kpath(g, nodes, kappa):
    """Exact expected number of start nodes whose random simple walk of
    length kappa touches the set.  Exponential in kappa; small graphs only."""
    if g.n > 12:
        raise SizeError("exact walk enumeration is limited to n <= 12")
    hit = set(nodes)

    def walk_prob(v, visited, steps):
        # Probability the remaining walk hits the set, given it has not yet.
        if v in hit:
            return 1.0
        if steps == 0:
            return 0.0
        options = [w for w in g.adj[v] if w not in visited]
        if not options:
            return 0.0
        share = 1.0 / len(options)
        return share * sum(walk_prob(w, visited | {w}, steps - 1)
                           for w in options)

    return math.fsum(walk_prob(s, {s}, kappa) for s in range(g.n))


def triangle_count(g, nodes):
    """Number of triangles intersecting the node set."""
    nodes = set(nodes)
    return sum(1 for tri in all_triangles(g) if nodes.intersection(tri))


def triangle_greedy(g, k):
    """Greedy cover over triangles: each round picks the node incident to
    the most not-yet-covered triangles (ties to the smaller id)."""
    triangles = all_triangles(g)
    incidence = {}
    for i, tri in enumerate(triangles):
        for v in tri:
            incidence.setdefault(v, []).append(i)
    alive = [True] * len(triangles)
    chosen = []
    chosen_set = set()
    for _ in range(min(k, g.n)):
        best, best_gain = None, -1
        for v in range(g.n):
            if v in chosen_set:
                continue
            gain = sum(1 for i in incidence.get(v, ()) if alive[i])
            if gain > best_gain:
                best, best_gain = v, gain
        for i in incidence.get(best, ()):
            alive[i] = False
        chosen.append(best)
        chosen_set.add(best)
    return chosen


def centrality_csv(g, scores, path):
    """Write "node,score,scaled_score" rows using original labels."""
    denom = g.n * (g.n - 1) if g.n > 1 else 1
    with open(path, "w") as fh:
        fh.write("node,score,scaled_score\n")
        for v, score in enumerate(scores):
            fh.write(f"{g.labels[v]},{score:.9g},{score / denom:.9g}\n")
