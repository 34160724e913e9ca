import random

from centmax.graph import Graph


def path_graph(n, directed=False):
    return Graph(n, [(i, i + 1) for i in range(n - 1)], directed=directed)


def cycle_graph(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star_graph(leaves):
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def random_graph(n, p, rng, directed=False):
    if directed:
        edges = [(u, v) for u in range(n) for v in range(n)
                 if u != v and rng.random() < p]
    else:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < p]
    return Graph(n, edges, directed=directed)


def seeded(x=0):
    return random.Random(x)
