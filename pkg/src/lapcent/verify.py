"""Self-contained verification suites for every identity the toolkit rests
on. Each named check generates its own seeded instances, reports its worst
residual against a fixed tolerance, and hands back any failing instance as
an edge list for replay. The CLI `verify` command is a thin wrapper.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .electrical import (current_law_residual, recurrence_overhead,
                         verify_circuit_identities, voltages)
from .forests import forest_census, lplus_diag_via_forests, tree_center, tree_centrality
from .graph import Graph, format_edge_list, is_connected, shortest_path_distances
from .spectral import build_spectral, kirchhoff_index, topological_centrality
from .topology import DOWN, FLAT, UP, abilene_topology, pert_preset, sensitivity_report
from .walks import (HittingTable, commute_row_sum_identity,
                    commute_vs_resistance_gap, detour_overhead,
                    estimate_hitting_mc, estimate_visits_mc,
                    hitting_times_exact, kirchhoff_commute_identity,
                    simulate_hitting_steps)
from .zoo import (centrality_report, max_normalized, randomwalk_betweenness,
                  randomwalk_betweenness_by_solves, subgraph_centrality)


@dataclass
class CheckResult:
    name: str
    passed: bool
    residual: float | None
    tolerance: float | None
    detail: str = ""
    failures: list = field(default_factory=list)  # (slug, Graph)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        if self.residual is None:
            body = self.detail
        else:
            body = f"max residual {self.residual:.3e} (tol {self.tolerance:.1e})"
            if self.detail:
                body += f"; {self.detail}"
        return f"{status} {self.name}: {body}"


@dataclass
class VerifyConfig:
    seed: int = 42
    tolerance: float | None = None  # overrides every check tolerance when set
    max_n: int | None = None        # overrides instance-size upper bounds
    runs: int = 20000               # Monte Carlo runs per estimate


def _tol(cfg: VerifyConfig, default: float) -> float:
    return cfg.tolerance if cfg.tolerance is not None else default


def _cap_n(cfg: VerifyConfig, default: int) -> int:
    return cfg.max_n if cfg.max_n is not None else default


# -- instance generators -------------------------------------------------


def random_connected(rng, n, p=0.4, weighted=False) -> Graph:
    """Erdos-Renyi draw conditioned on connectivity (resampled until hit)."""
    while True:
        edges = []
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < p:
                    w = float(rng.uniform(0.2, 3.0)) if weighted else 1.0
                    edges.append((u, v, w))
        if not edges:
            continue
        g = Graph(n, edges)
        if is_connected(g):
            return g


def random_tree(rng, n) -> Graph:
    """Uniform labeled tree from a random Pruefer sequence."""
    if n == 1:
        return Graph(1, [])
    if n == 2:
        return Graph(2, [(0, 1)])
    seq = [int(rng.integers(0, n)) for _ in range(n - 2)]
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


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


# -- individual checks ----------------------------------------------------


def check_detour_average(cfg: VerifyConfig) -> CheckResult:
    """Average forced-detour overhead through k equals l+_kk."""
    tol = _tol(cfg, 1e-9)
    hi = _cap_n(cfg, 12)
    rng = np.random.default_rng(cfg.seed)
    worst, failures = 0.0, []
    for _ in range(100):
        n = int(rng.integers(4, hi + 1))
        g = random_connected(rng, n)
        b = build_spectral(g)
        ht = hitting_times_exact(g)
        H = ht.H
        res = 0.0
        for k in range(n):
            total = n * H[:, k].sum() + n * H[k, :].sum() - H.sum()
            res = max(res, abs(total / (n * n * ht.vol) - b.lplus[k, k]))
        worst = max(worst, res)
        if res > tol:
            failures.append(("detour-average", g))
    return CheckResult("detour-average", worst <= tol, worst, tol,
                       detail="100 random connected graphs", failures=failures)


def check_commute_resistance(cfg: VerifyConfig) -> CheckResult:
    """C_ij = Vol(G) * Omega_ij across hitting-time and pseudo-inverse routes."""
    tol = _tol(cfg, 1e-9)
    hi = _cap_n(cfg, 12)
    rng = np.random.default_rng(cfg.seed)
    worst, failures = 0.0, []
    for _ in range(100):
        n = int(rng.integers(4, hi + 1))
        g = random_connected(rng, n)
        gap = commute_vs_resistance_gap(hitting_times_exact(g), build_spectral(g))
        worst = max(worst, gap)
        if gap > tol:
            failures.append(("commute-resistance", g))
    return CheckResult("commute-resistance", worst <= tol, worst, tol,
                       detail="100 random connected graphs", failures=failures)


def check_detour_equivalence(cfg: VerifyConfig) -> CheckResult:
    """Hitting and commute detour forms agree; overhead is i<->j symmetric."""
    tol = _tol(cfg, 1e-9)
    hi = _cap_n(cfg, 8)
    rng = np.random.default_rng(cfg.seed)
    worst, failures = 0.0, []
    for _ in range(20):
        n = int(rng.integers(4, hi + 1))
        g = random_connected(rng, n)
        ht = hitting_times_exact(g)
        res = 0.0
        for i in range(n):
            for k in range(n):
                for j in range(n):
                    hit = ht.H[i, k] + ht.H[k, j] - ht.H[i, j]
                    com = (ht.C[i, k] + ht.C[k, j] - ht.C[i, j]) / 2.0
                    rev = ht.H[j, k] + ht.H[k, i] - ht.H[j, i]
                    res = max(res, abs(hit - com), abs(hit - rev))
        worst = max(worst, res)
        if res > tol:
            failures.append(("detour-equivalence", g))
    return CheckResult("detour-equivalence", worst <= tol, worst, tol,
                       detail="all triples on 20 graphs", failures=failures)


def check_electrical_detour(cfg: VerifyConfig) -> CheckResult:
    """Electrical recurrence overhead equals the walk detour overhead."""
    tol = _tol(cfg, 1e-9)
    hi = _cap_n(cfg, 10)
    rng = np.random.default_rng(cfg.seed)
    worst, failures = 0.0, []
    for t in range(20):
        n = int(rng.integers(4, hi + 1))
        g = random_connected(rng, n, weighted=bool(t % 2))
        b = build_spectral(g)
        ht = hitting_times_exact(g)
        res = 0.0
        for i in range(n):
            for k in range(n):
                for j in range(n):
                    if i == k or k == j or i == j:
                        continue
                    ov = recurrence_overhead(b, i, k, j)
                    res = max(res, abs(ov - detour_overhead(ht, i, k, j)))
        worst = max(worst, res)
        if res > tol:
            failures.append(("electrical-detour", g))
    return CheckResult("electrical-detour", worst <= tol, worst, tol,
                       detail="all ordered triples on 20 graphs (weighted included)",
                       failures=failures)


def check_circuit_identities(cfg: VerifyConfig) -> CheckResult:
    """Superposition and reciprocity of sink-gauged voltages."""
    tol = _tol(cfg, 1e-9)
    hi = _cap_n(cfg, 10)
    rng = np.random.default_rng(cfg.seed)
    worst, failures = 0.0, []
    for t in range(20):
        n = int(rng.integers(3, hi + 1))
        g = random_connected(rng, n, weighted=bool(t % 2))
        b = build_spectral(g)
        triples = [(x, y, z) for x in range(n) for y in range(n) for z in range(n)]
        rep = verify_circuit_identities(b, triples)
        worst = max(worst, rep.max_residual)
        if rep.max_residual > tol:
            failures.append(("circuit-identities", g))
    return CheckResult("circuit-identities", worst <= tol, worst, tol,
                       detail="all triples on 20 graphs", failures=failures)


def check_current_law(cfg: VerifyConfig) -> CheckResult:
    """Kirchhoff current law at interior nodes of solved profiles."""
    tol = _tol(cfg, 1e-9)
    hi = _cap_n(cfg, 10)
    rng = np.random.default_rng(cfg.seed)
    worst, failures = 0.0, []
    for t in range(20):
        n = int(rng.integers(3, hi + 1))
        g = random_connected(rng, n, weighted=bool(t % 2))
        b = build_spectral(g)
        res = max(current_law_residual(b, i, j)
                  for i in range(n) for j in range(n) if i != j)
        worst = max(worst, res)
        if res > tol:
            failures.append(("current-law", g))
    return CheckResult("current-law", worst <= tol, worst, tol,
                       detail="all source/sink pairs on 20 graphs", failures=failures)


def check_recurrence_positive(cfg: VerifyConfig) -> CheckResult:
    """U^{ij}_i > 0 on finite connected graphs."""
    hi = _cap_n(cfg, 10)
    rng = np.random.default_rng(cfg.seed)
    lowest = np.inf
    failures = []
    for _ in range(20):
        n = int(rng.integers(3, hi + 1))
        g = random_connected(rng, n)
        b = build_spectral(g)
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                u_src = float(voltages(b, i, j).visits[i])
                lowest = min(lowest, u_src)
                if u_src <= 0:
                    failures.append(("recurrence-positive", g))
    return CheckResult("recurrence-positive", lowest > 0, None, None,
                       detail=f"min source visit count {lowest:.6f} > 0",
                       failures=failures)


def check_spectral_consistency(cfg: VerifyConfig) -> CheckResult:
    """Both L+ routes, Moore-Penrose identities, centering, embedding."""
    route_tol = _tol(cfg, 1e-8)
    mp_tol = _tol(cfg, 1e-9)
    center_tol = _tol(cfg, 1e-10)
    hi = _cap_n(cfg, 12)
    rng = np.random.default_rng(cfg.seed)
    worst, failures = 0.0, []
    for t in range(100):
        n = int(rng.integers(2, hi + 1))
        g = random_connected(rng, n, weighted=bool(t % 3 == 0))
        b = build_spectral(g)  # raises if the two routes disagree
        lap, lp = b.laplacian, b.lplus
        scale_l = max(1.0, float(np.max(np.abs(lap))))
        scale_p = max(1.0, float(np.max(np.abs(lp))))
        res = max(
            float(np.max(np.abs(lap @ lp @ lap - lap))) / scale_l / mp_tol,
            float(np.max(np.abs(lp @ lap @ lp - lp))) / scale_p / mp_tol,
            float(np.max(np.abs(lp.sum(axis=0)))) / center_tol,
            float(np.max(np.abs(lp.sum(axis=1)))) / center_tol,
            float(np.max(np.abs(b.embedding.T @ b.embedding - lp))) / mp_tol,
            float(np.max(np.abs(np.sum(b.embedding**2, axis=0) - np.diag(lp)))) / mp_tol,
            float(np.max(np.abs(lp - b.lplus_eigen))) / route_tol,
        )
        worst = max(worst, res)
        if res > 1.0:
            failures.append(("spectral-consistency", g))
    return CheckResult("spectral-consistency", worst <= 1.0, worst, 1.0,
                       detail="scaled to per-identity tolerances; 100 graphs",
                       failures=failures)


def check_resistance_metric(cfg: VerifyConfig) -> CheckResult:
    """Effective resistance satisfies the triangle inequality."""
    tol = _tol(cfg, 1e-9)
    hi = _cap_n(cfg, 10)
    rng = np.random.default_rng(cfg.seed)
    worst, failures = 0.0, []
    for _ in range(30):
        n = int(rng.integers(3, hi + 1))
        g = random_connected(rng, n)
        b = build_spectral(g)
        d = np.diag(b.lplus)
        omega = d[:, None] + d[None, :] - 2 * b.lplus
        viol = float(np.max(omega[:, :, None]
                            - omega[:, None, :] - omega[None, :, :]))
        worst = max(worst, viol)
        if viol > tol:
            failures.append(("resistance-metric", g))
    return CheckResult("resistance-metric", worst <= tol, worst, tol,
                       detail="triangle violations on 30 graphs", failures=failures)


def check_spd_metric(cfg: VerifyConfig) -> CheckResult:
    """Geodesic distance is a metric (symmetry, zero diagonal, triangle)."""
    tol = _tol(cfg, 1e-9)
    hi = _cap_n(cfg, 10)
    rng = np.random.default_rng(cfg.seed)
    worst, failures = 0.0, []
    for t in range(30):
        n = int(rng.integers(2, hi + 1))
        g = random_connected(rng, n, weighted=bool(t % 2))
        spd = shortest_path_distances(g)
        res = max(
            float(np.max(np.abs(spd - spd.T))),
            float(np.max(np.abs(np.diag(spd)))),
            float(np.max(spd[:, :, None] - spd[:, None, :] - spd[None, :, :])),
        )
        worst = max(worst, res)
        if res > tol:
            failures.append(("spd-metric", g))
    return CheckResult("spd-metric", worst <= tol, worst, tol,
                       detail="30 graphs", failures=failures)


def check_forest_diagonal(cfg: VerifyConfig) -> CheckResult:
    """Forest-census diagonal equals the spectral diagonal."""
    tol = _tol(cfg, 1e-9)
    hi = min(_cap_n(cfg, 7), 7)
    rng = np.random.default_rng(cfg.seed)
    worst, failures = 0.0, []
    sample = None
    for _ in range(500):
        n = int(rng.integers(3, hi + 1))
        g = random_connected(rng, n, p=0.5)
        gap = float(np.max(np.abs(lplus_diag_via_forests(g)
                                  - np.diag(build_spectral(g).lplus))))
        worst = max(worst, gap)
        if sample is None or g.n > sample[0].n:
            sample = (g, gap)
        if gap > tol:
            failures.append(("forest-diagonal", g))
    g, gap = sample
    c = forest_census(g)
    detail = (f"500 random connected unweighted graphs; sample census "
              f"(n={g.n}, m={g.m}): eps_n1={c.eps_n1}, eps_n2={c.eps_n2}, "
              f"rooted={list(c.eps_rooted)}, residual={gap:.3e}")
    return CheckResult("forest-diagonal", worst <= tol, worst, tol,
                       detail=detail, failures=failures)


def check_census_disjointness(cfg: VerifyConfig) -> CheckResult:
    """Each two-tree forest is counted once per root node, and it has two
    roots: sum_i rooted_i = 2 * eps_n2, exactly."""
    hi = min(_cap_n(cfg, 7), 7)
    rng = np.random.default_rng(cfg.seed)
    bad = 0
    failures = []
    for _ in range(100):
        n = int(rng.integers(3, hi + 1))
        g = random_connected(rng, n, p=0.5)
        c = forest_census(g)
        if sum(c.eps_rooted) != 2 * c.eps_n2:
            bad += 1
            failures.append(("census-disjointness", g))
    return CheckResult("census-disjointness", bad == 0, None, None,
                       detail=f"{bad} violations in 100 graphs (exact integers)",
                       failures=failures)


def check_tree_partition(cfg: VerifyConfig) -> CheckResult:
    """Tree partition formula matches the spectral diagonal; the most
    central node is the tree center."""
    tol = _tol(cfg, 1e-9)
    hi = _cap_n(cfg, 12)
    rng = np.random.default_rng(cfg.seed)
    worst, failures = 0.0, []
    for _ in range(100):
        n = int(rng.integers(3, hi + 1))
        t = random_tree(rng, n)
        b = build_spectral(t)
        gap = float(np.max(np.abs(tree_centrality(t) - np.diag(b.lplus))))
        centers = tree_center(t)
        top = int(np.argmax(topological_centrality(b)))
        if top not in centers:
            gap = max(gap, 1.0)
        worst = max(worst, gap)
        if gap > tol:
            failures.append(("tree-partition", t))
    return CheckResult("tree-partition", worst <= tol, worst, tol,
                       detail="100 random trees", failures=failures)


def check_tree_spd_resistance(cfg: VerifyConfig) -> CheckResult:
    """On trees geodesic distance equals effective resistance."""
    tol = _tol(cfg, 1e-9)
    hi = _cap_n(cfg, 12)
    rng = np.random.default_rng(cfg.seed)
    worst, failures = 0.0, []
    for _ in range(50):
        n = int(rng.integers(2, hi + 1))
        t = random_tree(rng, n)
        b = build_spectral(t)
        d = np.diag(b.lplus)
        omega = d[:, None] + d[None, :] - 2 * b.lplus
        gap = float(np.max(np.abs(shortest_path_distances(t) - omega)))
        worst = max(worst, gap)
        if gap > tol:
            failures.append(("tree-spd-resistance", t))
    return CheckResult("tree-spd-resistance", worst <= tol, worst, tol,
                       detail="50 random trees", failures=failures)


def check_commute_rowsum(cfg: VerifyConfig) -> CheckResult:
    """Commute row sums against n l+_kk + Tr, and the Kirchhoff double sum."""
    tol = _tol(cfg, 1e-9)
    hi = _cap_n(cfg, 12)
    rng = np.random.default_rng(cfg.seed)
    worst, failures = 0.0, []
    for _ in range(50):
        n = int(rng.integers(3, hi + 1))
        g = random_connected(rng, n)
        b = build_spectral(g)
        ht = hitting_times_exact(g)
        res = 0.0
        for k in range(n):
            lhs, rhs = commute_row_sum_identity(g, b, k, ht=ht)
            res = max(res, abs(lhs - rhs))
        lhs, rhs = kirchhoff_commute_identity(g, b, ht=ht)
        res = max(res, abs(lhs - rhs))
        worst = max(worst, res)
        if res > tol:
            failures.append(("commute-rowsum", g))
    return CheckResult("commute-rowsum", worst <= tol, worst, tol,
                       detail="50 graphs", failures=failures)


def check_cstar_commute_rank(cfg: VerifyConfig) -> CheckResult:
    """argmax C* coincides with argmin of the commute row sums."""
    hi = _cap_n(cfg, 12)
    rng = np.random.default_rng(cfg.seed)
    bad = 0
    failures = []
    for _ in range(50):
        n = int(rng.integers(3, hi + 1))
        g = random_connected(rng, n)
        b = build_spectral(g)
        ht = hitting_times_exact(g)
        cstar = topological_centrality(b)
        rows = ht.C.sum(axis=1)
        tol_c = 1e-9 * max(1.0, float(rows.max()))
        amax = set(np.flatnonzero(cstar >= cstar.max() - 1e-9 * cstar.max()))
        amin = set(np.flatnonzero(rows <= rows.min() + tol_c))
        if amax != amin:
            bad += 1
            failures.append(("cstar-commute-rank", g))
    return CheckResult("cstar-commute-rank", bad == 0, None, None,
                       detail=f"{bad} mismatches in 50 graphs", failures=failures)


def check_sc_series(cfg: VerifyConfig) -> CheckResult:
    """Spectral subgraph centrality equals the truncated factorial series."""
    tol = _tol(cfg, 1e-9)
    hi = _cap_n(cfg, 10)
    rng = np.random.default_rng(cfg.seed)
    worst, failures = 0.0, []
    for _ in range(30):
        n = int(rng.integers(2, hi + 1))
        g = random_connected(rng, n)
        a = g.adjacency
        term = np.eye(n)
        series = np.zeros(n)
        for k in range(1, 31):
            term = term @ a / k
            series += np.diag(term)
        series += 1.0  # k = 0 term
        gap = float(np.max(np.abs(subgraph_centrality(g) - series)))
        worst = max(worst, gap)
        if gap > tol:
            failures.append(("sc-series", g))
    return CheckResult("sc-series", worst <= tol, worst, tol,
                       detail="30-term series oracle on 30 graphs", failures=failures)


def check_rb_solves(cfg: VerifyConfig) -> CheckResult:
    """Current-flow betweenness: pseudo-inverse route vs per-pair solves."""
    tol = _tol(cfg, 1e-9)
    hi = _cap_n(cfg, 8)
    rng = np.random.default_rng(cfg.seed)
    worst, failures = 0.0, []
    for _ in range(20):
        n = int(rng.integers(3, hi + 1))
        g = random_connected(rng, n)
        gap = float(np.max(np.abs(randomwalk_betweenness(g)
                                  - randomwalk_betweenness_by_solves(g))))
        worst = max(worst, gap)
        if gap > tol:
            failures.append(("rb-solves", g))
    return CheckResult("rb-solves", worst <= tol, worst, tol,
                       detail="20 graphs", failures=failures)


def check_transitive_constancy(cfg: VerifyConfig) -> CheckResult:
    """Vertex-transitive graphs score every per-node index constant."""
    tol = _tol(cfg, 1e-9)
    worst = 0.0
    failures = []
    cases = [complete_graph(4), complete_graph(6)]
    for n in (4, 5, 8):
        cases.append(Graph(n, [(i, (i + 1) % n) for i in range(n)]))  # cycle
    for g in cases:
        rep = centrality_report(g)
        spread = max(float(np.ptp(getattr(rep, name))) for name in rep.PER_NODE)
        worst = max(worst, spread)
        if spread > tol:
            failures.append(("transitive-constancy", g))
    return CheckResult("transitive-constancy", worst <= tol, worst, tol,
                       detail="complete graphs and cycles", failures=failures)


def check_max_normalization(cfg: VerifyConfig) -> CheckResult:
    """Max-normalizing preserves argmax sets and tops out at 1."""
    hi = _cap_n(cfg, 10)
    rng = np.random.default_rng(cfg.seed)
    bad = 0
    failures = []
    for _ in range(20):
        n = int(rng.integers(3, hi + 1))
        g = random_connected(rng, n)
        rep = centrality_report(g)
        for name in rep.PER_NODE:
            vec = getattr(rep, name)
            norm = max_normalized(vec)
            if vec.max() > 0:
                ok = (abs(norm.max() - 1.0) < 1e-12
                      and set(np.flatnonzero(vec == vec.max()))
                      == set(np.flatnonzero(norm == norm.max())))
            else:
                ok = not norm.any()
            if not ok:
                bad += 1
                failures.append((f"max-normalization-{name}", g))
    return CheckResult("max-normalization", bad == 0, None, None,
                       detail=f"{bad} violations in 20 graphs", failures=failures)


def check_extremal_kirchhoff(cfg: VerifyConfig) -> CheckResult:
    """The star minimizes K among trees (exhaustive by Pruefer sequence up
    to n=8); K_5 minimizes K among the 728 connected 5-node graphs."""
    problems = []
    for n in range(3, 9):
        min_sum, min_count, star_sum, star_count = _kernels.tree_scan(n)
        if (star_sum != (n - 1) ** 2 or min_sum != star_sum
                or min_count != star_count or star_count != n):
            problems.append(f"trees n={n}")
    # all connected graphs on 5 nodes: 2^10 edge masks, batch eigensolve
    n = 5
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    masks = np.arange(1 << len(pairs))
    laps = np.zeros((len(masks), n, n))
    for b, (u, v) in enumerate(pairs):
        has = (masks >> b) & 1
        laps[:, u, v] -= has
        laps[:, v, u] -= has
        laps[:, u, u] += has
        laps[:, v, v] += has
    evals = np.linalg.eigvalsh(laps)
    connected = evals[:, 1] > 1e-9
    kvals = np.where(connected, np.sum(1.0 / np.where(evals[:, 1:] > 1e-12,
                                                      evals[:, 1:], np.inf), axis=1),
                     np.inf)
    n_connected = int(connected.sum())
    full_mask = (1 << len(pairs)) - 1
    if n_connected != 728:
        problems.append(f"expected 728 connected graphs, got {n_connected}")
    if int(np.argmin(kvals)) != full_mask:
        problems.append("K_5 is not the Kirchhoff minimizer")
    if np.sum(np.isclose(kvals, kvals.min(), atol=1e-12)) != 1:
        problems.append("Kirchhoff minimizer on 5 nodes is not unique")
    ok = not problems
    return CheckResult("extremal-kirchhoff", ok, None, None,
                       detail="; ".join(problems) if problems
                       else "star minimal for trees n<=8; K_5 minimal among 728")


def check_mc_hitting(cfg: VerifyConfig) -> CheckResult:
    """Monte Carlo hitting estimates agree with the exact solves to 4 SE,
    and the per-run sequence is chunking-invariant."""
    runs = cfg.runs
    problems = []
    for g, pairs in ((path_graph(3), [(0, 1), (0, 2), (1, 0)]),
                     (complete_graph(4), [(0, 1), (2, 3)])):
        exact = hitting_times_exact(g).H
        for i, j in pairs:
            est = estimate_hitting_mc(g, i, j, runs, cfg.seed)
            se = max(est.std_error, 1e-12)
            if abs(est.mean - exact[i, j]) > 4 * se:
                problems.append(f"{g!r} ({i},{j}): {est.mean:.4f} vs {exact[i, j]:.4f}")
        full = simulate_hitting_steps(g, 0, 1, 512, cfg.seed)
        split = np.concatenate([
            simulate_hitting_steps(g, 0, 1, 200, cfg.seed),
            simulate_hitting_steps(g, 0, 1, 312, cfg.seed, run_start=200),
        ])
        if not np.array_equal(full, split):
            problems.append(f"{g!r}: run sequence depends on chunking")
    return CheckResult("mc-hitting", not problems, None, None,
                       detail="; ".join(problems) if problems
                       else f"{runs} runs within 4 SE; chunk-invariant")


def check_mc_visits(cfg: VerifyConfig) -> CheckResult:
    """Monte Carlo visit counts match d(k) * v(k) from the voltage gauge."""
    runs = cfg.runs
    problems = []
    for g, pairs in ((path_graph(3), [(0, 2), (2, 0)]),
                     (complete_graph(4), [(0, 3)])):
        b = build_spectral(g)
        for i, j in pairs:
            prof = voltages(b, i, j)
            est = estimate_visits_mc(g, i, j, runs, cfg.seed)
            for k in range(g.n):
                if k == j:
                    continue
                se = max(float(est.std_errors[k]), 1e-12)
                if abs(float(est.means[k]) - float(prof.visits[k])) > 4 * se:
                    problems.append(f"{g!r} U^{i}{j}_{k}")
    return CheckResult("mc-visits", not problems, None, None,
                       detail="; ".join(problems) if problems
                       else f"visit counts within 4 SE at {runs} runs")


def check_generator(cfg: VerifyConfig) -> CheckResult:
    """Preset generator determinism, constraint checks, label-based rewiring."""
    problems = []
    g1 = abilene_topology(seed=cfg.seed)
    g2 = abilene_topology(seed=cfg.seed)
    if format_edge_list(g1) != format_edge_list(g2):
        problems.append("generator is not deterministic")
    perm = list(range(g1.n))
    perm[5], perm[25] = perm[25], perm[5]
    inv = [0] * g1.n
    for old, new in enumerate(perm):
        inv[new] = old
    relabeled = Graph(g1.n, [(perm[u], perm[v], w) for u, v, w in g1.edges],
                      labels=[f"v{inv[i] + 1}" for i in range(g1.n)])
    direct = pert_preset(g1, "pert1")
    via = pert_preset(relabeled, "pert1")
    back = {(min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v, _ in direct.edges}
    got = {(u, v) for u, v, _ in via.edges}
    if back != got:
        problems.append("preset rewiring does not commute with relabeling")
    return CheckResult("generator", not problems, None, None,
                       detail="; ".join(problems) if problems
                       else "deterministic; constraints hold; label-driven rewiring")


TABLE1_EXPECT = {
    "pert1": {"kstar": DOWN, "randic": UP, "gc_mean": DOWN,
              "sc_mean": UP, "gb_mean": UP, "rb_mean": UP},
    "pert2": {"kstar": UP, "randic": FLAT, "gc_mean": UP,
              "sc_mean": DOWN, "gb_mean": DOWN, "rb_mean": UP},
}


def check_sensitivity_directions(cfg: VerifyConfig) -> CheckResult:
    """Direction arrows of the two rewiring presets on the bundled preset
    topology, plus exact Randic invariance for the second."""
    g0 = abilene_topology(seed=cfg.seed)
    g1 = pert_preset(g0, "pert1")
    g2 = pert_preset(g1, "pert2")
    problems = []
    rep1 = sensitivity_report(g0, g1)
    rep2 = sensitivity_report(g1, g2)
    for which, rep in (("pert1", rep1), ("pert2", rep2)):
        for key, arrow in TABLE1_EXPECT[which].items():
            if rep.directions[key] != arrow:
                problems.append(f"{which}:{key} expected {arrow}, got {rep.directions[key]}")
    if rep2.deltas["randic"] != 0.0:
        problems.append("pert2 Randic delta must be exactly 0")
    self_rep = sensitivity_report(g0, g0)
    if any(v != FLAT for v in self_rep.directions.values()):
        problems.append("self-comparison must be all flat")
    detail = ("; ".join(problems) if problems else
              f"dK*={rep1.deltas['kstar']:+.4f}/{rep2.deltas['kstar']:+.4f}, "
              f"dR1={rep1.deltas['randic']:+.4f}/{rep2.deltas['randic']:+.4f}")
    return CheckResult("sensitivity-directions", not problems, None, None, detail=detail)


ALL_CHECKS = [
    ("detour-average", check_detour_average),
    ("commute-resistance", check_commute_resistance),
    ("detour-equivalence", check_detour_equivalence),
    ("electrical-detour", check_electrical_detour),
    ("circuit-identities", check_circuit_identities),
    ("current-law", check_current_law),
    ("recurrence-positive", check_recurrence_positive),
    ("spectral-consistency", check_spectral_consistency),
    ("resistance-metric", check_resistance_metric),
    ("spd-metric", check_spd_metric),
    ("forest-diagonal", check_forest_diagonal),
    ("census-disjointness", check_census_disjointness),
    ("tree-partition", check_tree_partition),
    ("tree-spd-resistance", check_tree_spd_resistance),
    ("commute-rowsum", check_commute_rowsum),
    ("cstar-commute-rank", check_cstar_commute_rank),
    ("sc-series", check_sc_series),
    ("rb-solves", check_rb_solves),
    ("transitive-constancy", check_transitive_constancy),
    ("max-normalization", check_max_normalization),
    ("extremal-kirchhoff", check_extremal_kirchhoff),
    ("mc-hitting", check_mc_hitting),
    ("mc-visits", check_mc_visits),
    ("generator", check_generator),
    ("sensitivity-directions", check_sensitivity_directions),
]


def run_checks(cfg: VerifyConfig, only: str | None = None):
    """Run (a filtered subset of) all checks; returns the result list."""
    results = []
    for name, fn in ALL_CHECKS:
        if only and only not in name:
            continue
        results.append(fn(cfg))
    return results
