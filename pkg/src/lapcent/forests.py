"""Connected bi-partitions and rooted spanning-forest counts.

A connected bi-partition splits the node set into two blocks that both induce
connected subgraphs; it models a multi-edge failure that cuts the network in
two. Counting spanning trees inside the blocks yields the rooted-forest
census, which reproduces the diagonal of the Laplacian pseudo-inverse by pure
integer combinatorics:

    l+_ii = (rooted_i - forests_two_trees / n) / (n * tree_count)

with rooted_i the number of two-tree spanning forests rooted at i. That makes
this module the brute-force oracle for the spectral module on small
unweighted graphs. Counts use exact big-integer arithmetic (fraction-free
Bareiss elimination for the determinants).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .graph import Graph, GraphError, is_connected, shortest_path_distances

MAX_ENUM_NODES = 14  # bi-partition enumeration is exponential in n


class SizeLimitError(GraphError):
    """Input too large for exhaustive enumeration."""


class NotATreeError(GraphError):
    """Operation is defined for trees only."""


def _check_enum_size(g: Graph, what: str):
    if g.n > MAX_ENUM_NODES:
        raise SizeLimitError(
            f"{what} enumerates bi-partitions and is capped at n <= {MAX_ENUM_NODES}; got n = {g.n}"
        )


def _check_unweighted(g: Graph, what: str):
    if not g.unweighted:
        raise GraphError(f"{what} is defined for unweighted graphs")


# -- exact determinants and spanning-tree counts -----------------------


def det_int(rows) -> int:
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    m = [list(map(int, r)) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _tree_count_subset(g: Graph, nodes) -> int:
    """Spanning trees of the induced subgraph on `nodes` (unweighted, exact).

    Matrix-Tree: determinant of the induced Laplacian with one node removed.
    Disconnected induced subgraphs come out as 0.
    """
    k = len(nodes)
    if k == 1:
        return 1
    pos = {v: idx for idx, v in enumerate(nodes)}
    lap = [[0] * k for _ in range(k)]
    for u, v, _ in g.edges:
        if u in pos and v in pos:
            a, b = pos[u], pos[v]
            lap[a][a] += 1
            lap[b][b] += 1
            lap[a][b] -= 1
            lap[b][a] -= 1
    reduced = [row[1:] for row in lap[1:]]
    return det_int(reduced)


def count_spanning_trees(g: Graph):
    """|T(G)| via the Matrix-Tree theorem.

    Exact integer for unweighted graphs; for weighted graphs the weighted
    tree sum as a float. Disconnected graphs have no spanning tree: 0.
    """
    if not is_connected(g):
        return 0
    if g.n == 1:
        return 1
    if g.unweighted:
        return _tree_count_subset(g, list(range(g.n)))
    lap = np.diag(g.degrees) - g.adjacency
    return float(np.linalg.det(lap[1:, 1:]))


# -- bi-partitions ------------------------------------------------------


@dataclass(frozen=True)
class BiPartition:
    """Two-block split with connected blocks; block S contains node 0."""

    s_nodes: tuple
    sprime_nodes: tuple
    cut: tuple
    trees_s: int
    trees_sprime: int


def _neighbor_masks(g: Graph):
    masks = [0] * g.n
    for u, v, _ in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


def _mask_connected(mask: int, nbr: list) -> bool:
    if mask == 0:
        return False
    start = (mask & -mask).bit_length() - 1
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        m = frontier
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            nxt |= nbr[u] & mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen == mask


def _bits(mask: int):
    out = []
    while mask:
        out.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return out


def enumerate_bipartitions(g: Graph):
    """All connected bi-partitions, canonically oriented (node 0 in S).

    Requires a connected graph and n <= MAX_ENUM_NODES.
    """
    _check_enum_size(g, "enumerate_bipartitions")
    if not is_connected(g):
        raise GraphError("bi-partitions are defined for connected graphs")
    _check_unweighted(g, "enumerate_bipartitions")
    n = g.n
    nbr = _neighbor_masks(g)
    full = (1 << n) - 1
    out = []
    for smask in range(1, full, 2):  # odd masks: node 0 always in S
        cmask = full ^ smask
        if not _mask_connected(smask, nbr) or not _mask_connected(cmask, nbr):
            continue
        s_nodes = _bits(smask)
        c_nodes = _bits(cmask)
        cut = tuple((u, v) for u, v, _ in g.edges
                    if ((smask >> u) & 1) != ((smask >> v) & 1))
        out.append(BiPartition(
            s_nodes=tuple(s_nodes),
            sprime_nodes=tuple(c_nodes),
            cut=cut,
            trees_s=_tree_count_subset(g, s_nodes),
            trees_sprime=_tree_count_subset(g, c_nodes),
        ))
    return out


# -- rooted-forest census ------------------------------------------------


@dataclass(frozen=True)
class ForestCensus:
    """Counts of spanning rooted forests with n-1 and n-2 edges.

    eps_n1: forests with n-1 edges (= n * spanning trees).
    eps_n2: two-tree forests with one root marked in each tree.
    eps_rooted[i]: two-tree forests where i's tree is rooted at i.
    All exact integers.
    """

    eps_n1: int
    eps_n2: int
    eps_rooted: tuple


def forest_census(g: Graph) -> ForestCensus:
    """Aggregate the bi-partition enumeration into rooted-forest counts.

    Per partition P = (S, S') a two-tree forest is a spanning tree of each
    block; rooting at i in S leaves |S'| root choices on the other side.
    """
    _check_enum_size(g, "forest_census")
    _check_unweighted(g, "forest_census")
    parts = enumerate_bipartitions(g)
    n = g.n
    eps_rooted = [0] * n
    eps_n2 = 0
    for p in parts:
        pair = p.trees_s * p.trees_sprime
        size_s = len(p.s_nodes)
        size_c = len(p.sprime_nodes)
        eps_n2 += pair * size_s * size_c
        for i in p.s_nodes:
            eps_rooted[i] += pair * size_c
        for i in p.sprime_nodes:
            eps_rooted[i] += pair * size_s
    eps_n1 = n * count_spanning_trees(g)
    return ForestCensus(eps_n1=eps_n1, eps_n2=eps_n2, eps_rooted=tuple(eps_rooted))


def lplus_diag_via_forests(g: Graph) -> np.ndarray:
    """diag(L+) by pure forest counting (the combinatorial oracle)."""
    census = forest_census(g)
    n = g.n
    out = np.array([
        float(Fraction(census.eps_rooted[i], 1)
              - Fraction(census.eps_n2, n)) / census.eps_n1
        for i in range(n)
    ])
    return out


def lplus_diag_fractions(g: Graph):
    """Same as lplus_diag_via_forests but as exact Fractions."""
    census = forest_census(g)
    n = g.n
    return [
        (Fraction(census.eps_rooted[i]) - Fraction(census.eps_n2, n))
        / census.eps_n1
        for i in range(n)
    ]


# -- trees ---------------------------------------------------------------


def _require_tree(g: Graph, what: str):
    if g.m != g.n - 1 or not is_connected(g):
        raise NotATreeError(f"{what} needs a tree (connected, n-1 edges)")


def tree_centrality(t: Graph) -> np.ndarray:
    """diag(L+) of an unweighted tree from edge-deletion component sizes.

    Deleting an edge splits the tree in two; node i collects the squared
    size of the component it is NOT in, summed over all n-1 edges, divided
    by n^2. Node i lies in the subtree under v exactly when v is on the
    root-to-i path, so one prefix pass over the BFS order covers all edges.
    """
    _require_tree(t, "tree_centrality")
    _check_unweighted(t, "tree_centrality")
    n = t.n
    indptr, nbrs, _ = t.csr()
    order = np.empty(n, np.int64)
    parent = np.full(n, -2, np.int64)
    order[0] = 0
    parent[0] = -1
    head, tail = 0, 1
    while head < tail:
        u = order[head]
        head += 1
        for e in range(indptr[u], indptr[u + 1]):
            v = int(nbrs[e])
            if parent[v] == -2:
                parent[v] = u
                order[tail] = v
                tail += 1
    size = np.ones(n, np.int64)
    for idx in range(n - 1, 0, -1):
        v = order[idx]
        size[parent[v]] += size[v]
    # edge owned by non-root v: inside nodes score (n-s)^2, outside s^2
    total_sq = sum(int(size[v]) ** 2 for v in range(1, n))
    acc = np.zeros(n, np.int64)
    for idx in range(1, n):
        v = order[idx]
        s = int(size[v])
        acc[v] = acc[parent[v]] + (n - s) ** 2 - s * s
    return (acc + total_sq) / float(n * n)


def tree_center(t: Graph, check_tol: float = 1e-9):
    """Nodes minimizing total geodesic distance, as a sorted tuple.

    On a tree this set coincides with the argmax of C* because
    l+_ii = (sum_j SPD(i,j) - Tr(L+)) / n there; the equality is asserted
    against the spectral route before returning.
    """
    _require_tree(t, "tree_center")
    from .spectral import build_spectral  # local import to avoid a cycle

    spd = shortest_path_distances(t)
    totals = spd.sum(axis=1)
    b = build_spectral(t)
    diag = np.diag(b.lplus)
    shift_gap = np.max(np.abs(diag - (totals - np.trace(b.lplus)) / t.n))
    if shift_gap > check_tol:
        raise ArithmeticError(
            f"tree identity l+_ii = (sum_j SPD - Tr)/n failed: {shift_gap:.3e}"
        )
    centers = np.flatnonzero(totals <= totals.min() + check_tol)
    best_c = np.flatnonzero(diag <= diag.min() + check_tol)
    if set(centers) != set(best_c):
        raise ArithmeticError("tree center set differs from argmax C* set")
    return tuple(int(x) for x in centers)
