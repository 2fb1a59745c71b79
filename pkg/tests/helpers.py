"""Shared test fixtures: small named graphs and brute-force oracles that are
deliberately independent of the package's own computation routes."""

from itertools import combinations

import numpy as np

from lapcent import Graph


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star_graph(n):
    """Hub is node 0."""
    return Graph(n, [(0, i) for i in range(1, n)])


def cycle_graph(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def random_connected_graph(rng, n, p=0.4, weighted=False):
    while True:
        edges = []
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < p:
                    w = float(rng.uniform(0.2, 3.0)) if weighted else 1.0
                    edges.append((u, v, w))
        if len(edges) < n - 1:
            continue
        g = Graph(n, edges)
        if _connected(g):
            return g


def random_tree(rng, n):
    """Uniform labeled tree decoded from a random Pruefer sequence."""
    if n <= 2:
        return Graph(n, [(0, 1)] if n == 2 else [])
    seq = [int(rng.integers(0, n)) for _ in range(n - 2)]
    return tree_from_pruefer(seq, n)


def tree_from_pruefer(seq, n):
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    edges = []
    ptr = 0
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    for x in seq:
        edges.append((leaf, x))
        deg[x] -= 1
        if deg[x] == 1 and x < ptr:
            leaf = x
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1))
    return Graph(n, edges)


def _connected(g):
    seen = {0}
    stack = [0]
    adj = [[] for _ in range(g.n)]
    for u, v, _ in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == g.n


# -- brute-force oracles ------------------------------------------------


def fundamental_visits(g, i, j):
    """Expected visits to each node of the absorbed walk i -> j, from the
    fundamental matrix N = (I - Q)^-1 of the chain with j removed. The
    start position counts; arrival at j does not."""
    n = g.n
    P = g.adjacency / g.degrees[:, None]
    keep = [k for k in range(n) if k != j]
    N = np.linalg.inv(np.eye(n - 1) - P[np.ix_(keep, keep)])
    out = np.zeros(n)
    row = keep.index(i)
    for col, k in enumerate(keep):
        out[k] = N[row, col]
    return out


def hitting_by_fundamental(g, i, j):
    """Expected steps i -> j = total expected visits before absorption."""
    return float(fundamental_visits(g, i, j).sum())


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def brute_two_tree_forests(g):
    """Enumerate every spanning two-tree forest (n-2 acyclic edges).

    Yields frozensets of the two component node sets. Independent of the
    package's bipartition/Matrix-Tree machinery.
    """
    n = g.n
    for sub in combinations(range(g.m), n - 2):
        uf = _UnionFind(n)
        ok = True
        for ei in sub:
            u, v, _ = g.edges[ei]
            if not uf.union(u, v):
                ok = False
                break
        if not ok:
            continue
        comp = {}
        for node in range(n):
            comp.setdefault(uf.find(node), []).append(node)
        parts = list(comp.values())
        assert len(parts) == 2
        yield frozenset(parts[0]), frozenset(parts[1])


def brute_forest_census(g):
    """(eps_rooted list, eps_n2) by raw forest enumeration with root markings."""
    n = g.n
    eps_rooted = [0] * n
    eps_n2 = 0
    for a, b in brute_two_tree_forests(g):
        eps_n2 += len(a) * len(b)
        for i in a:
            eps_rooted[i] += len(b)
        for i in b:
            eps_rooted[i] += len(a)
    return eps_rooted, eps_n2


def brute_spanning_tree_count(g):
    """Count spanning trees by enumerating (n-1)-edge subsets."""
    n = g.n
    count = 0
    for sub in combinations(range(g.m), n - 1):
        uf = _UnionFind(n)
        if all(uf.union(*g.edges[ei][:2]) for ei in sub):
            count += 1
    return count
